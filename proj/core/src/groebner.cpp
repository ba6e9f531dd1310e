#include "apolab/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "apolab/matrix.hpp"
#include "apolab/util.hpp"

namespace apolab {

std::pair<MultiIndex, GaussianRational> lex_leading_term(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (MultiIndex::lex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

ReductionResult reduce(const Poly& f, const std::vector<Poly>& divisors) {
    std::vector<std::pair<MultiIndex, GaussianRational>> lead;
    lead.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) throw std::invalid_argument("reduce: zero divisor polynomial");
        if (g.frame() != f.frame()) throw std::invalid_argument("reduce: frame mismatch");
        lead.push_back(lex_leading_term(g));
    }

    ReductionResult out{Poly(f.frame()), {}};
    Poly work = f;
    while (!work.is_zero()) {
        auto [mono, coeff] = lex_leading_term(work);
        // pick the divisor with the lex-greatest leading term among those
        // whose leading term divides the current lead
        std::optional<std::size_t> chosen;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (!lead[k].first.divides(mono)) continue;
            if (!chosen || MultiIndex::lex_less(lead[*chosen].first, lead[k].first)) chosen = k;
        }
        if (!chosen) {
            // move the irreducible lead into the remainder
            out.remainder += Poly::monomial(f.frame(), mono, coeff);
            work -= Poly::monomial(f.frame(), mono, coeff);
            continue;
        }
        MultiIndex qmono = *mono.checked_sub(lead[*chosen].first);
        GaussianRational qcoeff = coeff / lead[*chosen].second;
        work -= Poly::monomial(f.frame(), qmono, qcoeff) * divisors[*chosen];
        out.steps.push_back(QuotientStep{*chosen, std::move(qmono), std::move(qcoeff)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// monomial ideals

namespace {

std::vector<MultiIndex> minimalize(std::vector<MultiIndex> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<MultiIndex> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    // ascending graded-lex sort already applied; keep it as the canonical order
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(VariableFrame frame, std::vector<MultiIndex> generators)
    : frame_(frame) {
    for (const auto& g : generators)
        if (g.size() != frame_.var_count())
            throw std::invalid_argument("monomial ideal generator arity mismatch");
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const MultiIndex& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::colon(const MultiIndex& m) const {
    std::vector<MultiIndex> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(*g.checked_sub(g.gcd(m)));
    return MonomialIdeal(frame_, std::move(out));
}

MonomialIdeal MonomialIdeal::colon_var(std::size_t var) const {
    MultiIndex m(frame_.var_count());
    m[var] = 1;
    return colon(m);
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    if (frame_ != other.frame_) throw std::invalid_argument("monomial intersect: frame mismatch");
    std::vector<MultiIndex> out;
    out.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) out.push_back(a.lcm(b));
    return MonomialIdeal(frame_, std::move(out));
}

long long MonomialIdeal::standard_monomial_count(unsigned degree) const {
    long long count = 0;
    for (const auto& m : monomials_of_degree(frame_.var_count(), degree))
        if (!contains(m)) ++count;
    return count;
}

std::optional<MonomialIdeal::StableCount> MonomialIdeal::stable_standard_count() const {
    if (is_unit()) return StableCount{0, 0};
    const std::size_t n = frame_.var_count();
    // find a variable absent from every generator
    std::optional<std::size_t> free_var;
    for (std::size_t v = 0; v < n && !free_var; ++v) {
        bool absent = true;
        for (const auto& g : gens_)
            if (g[v] > 0) absent = false;
        if (absent) free_var = v;
    }
    if (!free_var) return std::nullopt;
    // the remaining variables must each be killed by a pure generator power,
    // otherwise the staircase is infinite and the count never stabilizes
    unsigned bound = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (v == *free_var) continue;
        bool bounded = false;
        for (const auto& g : gens_) {
            bool pure = g[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && g[w] > 0) pure = false;
            if (pure) {
                bounded = true;
                bound = std::max(bound, g[v]);
            }
        }
        if (!bounded) return std::nullopt;
    }
    // enumerate the finite staircase in the bounded variables
    long long value = 0;
    unsigned max_deg = 0;
    const unsigned cap = bound * static_cast<unsigned>(n);  // safe overshoot
    for (unsigned a = 0; a <= cap; ++a) {
        for (const auto& m : monomials_of_degree(n, a)) {
            if (m[*free_var] > 0 || contains(m)) continue;
            ++value;
            max_deg = std::max(max_deg, a);
        }
    }
    return StableCount{value, max_deg};
}

std::vector<std::string> MonomialIdeal::generator_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(Poly::monomial(frame_, g).to_string());
    return out;
}

SaturationResult monomial_saturation(const MonomialIdeal& j) {
    MonomialIdeal current = j;
    unsigned iterations = 0;
    for (;;) {
        ++iterations;
        MonomialIdeal next = current.colon_var(0);
        for (std::size_t v = 1; v < j.frame().var_count(); ++v)
            next = next.intersect(current.colon_var(v));
        if (next == current) return SaturationResult{std::move(next), iterations};
        current = std::move(next);
    }
}

bool is_saturated(const MonomialIdeal& j) {
    MonomialIdeal once = j.colon_var(0);
    for (std::size_t v = 1; v < j.frame().var_count(); ++v)
        once = once.intersect(j.colon_var(v));
    return once == j;
}

// ---------------------------------------------------------------------------
// Buchberger colon criterion

BuchbergerWitness buchberger_colon_check(const std::vector<Poly>& generators) {
    if (generators.empty()) throw std::invalid_argument("buchberger check: empty generator list");
    const VariableFrame frame = generators.front().frame();
    for (const auto& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("buchberger check: zero generator");
        if (g.frame() != frame) throw std::invalid_argument("buchberger check: frame mismatch");
        if (!g.homogeneous_degree())
            throw std::invalid_argument("buchberger check: generators must be homogeneous");
    }

    BuchbergerWitness witness;
    witness.generators = generators;
    witness.ok = true;
    // the first generator has nothing to check against
    for (std::size_t j = 1; j < generators.size(); ++j) {
        std::vector<MultiIndex> previous_leads;
        for (std::size_t k = 0; k < j; ++k)
            previous_leads.push_back(lex_leading_term(generators[k]).first);
        MonomialIdeal colon =
            MonomialIdeal(frame, previous_leads).colon(lex_leading_term(generators[j]).first);

        ColonCheckStep step;
        step.j = j + 1;
        step.colon_generators = colon.generators();
        for (const auto& alpha : colon.generators()) {
            Poly multiplied = Poly::monomial(frame, alpha) * generators[j];
            ReductionResult red = reduce(multiplied, generators);
            const bool zero = red.remainder.is_zero();
            if (!zero) witness.ok = false;
            step.reductions.push_back(ColonCheckStep::Reduction{alpha, std::move(red), zero});
        }
        witness.steps.push_back(std::move(step));
    }
    return witness;
}

nlohmann::ordered_json BuchbergerWitness::to_json() const {
    nlohmann::ordered_json out;
    out["ok"] = ok;
    out["order"] = "lex z > u > v";
    out["generators"] = nlohmann::ordered_json::array();
    const VariableFrame frame = generators.front().frame();
    for (const auto& g : generators) out["generators"].push_back(g.to_string());
    out["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : steps) {
        nlohmann::ordered_json s;
        s["j"] = step.j;
        s["colon_generators"] = nlohmann::ordered_json::array();
        for (const auto& m : step.colon_generators)
            s["colon_generators"].push_back(Poly::monomial(frame, m).to_string());
        s["reductions"] = nlohmann::ordered_json::array();
        for (const auto& red : step.reductions) {
            nlohmann::ordered_json r;
            r["multiplier"] = Poly::monomial(frame, red.multiplier).to_string();
            r["chain"] = nlohmann::ordered_json::array();
            for (const auto& q : red.result.steps) {
                nlohmann::ordered_json t;
                t["generator"] = q.generator + 1;  // 1-based, matching "j"
                t["term"] = Poly::monomial(frame, q.monomial, q.coeff).to_string();
                r["chain"].push_back(std::move(t));
            }
            r["remainder"] = red.result.remainder.to_string();
            r["reduced_to_zero"] = red.reduced_to_zero;
            s["reductions"].push_back(std::move(r));
        }
        out["steps"].push_back(std::move(s));
    }
    return out;
}

MonomialIdeal leading_ideal(const BuchbergerWitness& witness) {
    if (!witness.ok)
        throw std::invalid_argument("leading ideal requires a verified Groebner basis");
    std::vector<MultiIndex> leads;
    for (const auto& g : witness.generators) leads.push_back(lex_leading_term(g).first);
    return MonomialIdeal(witness.generators.front().frame(), std::move(leads));
}

// ---------------------------------------------------------------------------
// graded presentations and Hilbert functions

GradedIdealPresentation::GradedIdealPresentation(std::vector<Poly> generators)
    : frame_(generators.empty() ? VariableFrame::uvz() : generators.front().frame()),
      generators_(std::move(generators)) {
    if (generators_.empty())
        throw std::invalid_argument("graded presentation: need at least one generator");
    for (const auto& g : generators_) {
        if (g.frame() != frame_) throw std::invalid_argument("graded presentation: frame mismatch");
        if (!g.homogeneous_degree())
            throw std::invalid_argument("graded presentation: generators must be homogeneous");
    }
}

BuchbergerWitness GradedIdealPresentation::establish_groebner(std::vector<Poly> ordered) {
    BuchbergerWitness witness = buchberger_colon_check(ordered);
    if (witness.ok) {
        // the attached basis must present the same ideal: every generator
        // reduces to zero against it
        for (const auto& g : generators_)
            if (!reduce(g, ordered).remainder.is_zero())
                throw std::invalid_argument(
                    "establish_groebner: basis does not contain the presented ideal");
        leading_ = leading_ideal(witness);
        groebner_ = std::move(ordered);
    }
    return witness;
}

long long GradedIdealPresentation::hilbert_function(unsigned a) const {
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        auto it = hilbert_cache_.find(a);
        if (it != hilbert_cache_.end()) return it->second;
    }
    const std::size_t n = frame_.var_count();
    MonomialBasis basis(n, a);
    RowSpace span(basis.size());
    for (const auto& g : generators_) {
        const unsigned e = *g.homogeneous_degree();
        if (e > a) continue;
        for (const auto& m : monomials_of_degree(n, a - e)) {
            if (span.full()) break;
            span.insert((Poly::monomial(frame_, m) * g).coefficient_row(basis));
        }
    }
    const long long by_rank = static_cast<long long>(basis.size()) -
                              static_cast<long long>(span.rank());
    if (leading_) {
        const long long by_standard = leading_->standard_monomial_count(a);
        if (by_standard != by_rank)
            throw std::logic_error(
                "hilbert function mismatch between rank and standard-monomial counts at degree " +
                std::to_string(a));
    }
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    hilbert_cache_[a] = by_rank;
    return by_rank;
}

}  // namespace apolab
