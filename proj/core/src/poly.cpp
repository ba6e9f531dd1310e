#include "apolab/poly.hpp"

#include <stdexcept>

#include "apolab/matrix.hpp"

namespace apolab {

namespace {

void require_same_frame(const VariableFrame& a, const VariableFrame& b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": frame mismatch (" + a.to_string() +
                                    " vs " + b.to_string() + ")");
}

}  // namespace

Poly::Poly(VariableFrame frame, TermMap terms) : frame_(frame), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != frame_.var_count())
            throw std::invalid_argument("term arity does not match frame");
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly Poly::constant(VariableFrame frame, GaussianRational c) {
    Poly p(frame);
    if (!c.is_zero()) p.terms_.emplace(MultiIndex(frame.var_count()), std::move(c));
    return p;
}

Poly Poly::variable(VariableFrame frame, std::size_t storage_index) {
    if (storage_index >= frame.var_count()) throw std::out_of_range("variable index out of range");
    MultiIndex m(frame.var_count());
    m[storage_index] = 1;
    return monomial(frame, m);
}

Poly Poly::monomial(VariableFrame frame, MultiIndex m, GaussianRational c) {
    if (m.size() != frame.var_count()) throw std::invalid_argument("monomial arity mismatch");
    Poly p(frame);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<unsigned> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

GaussianRational Poly::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Poly::add_term(const MultiIndex& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(frame_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_frame(frame_, o.frame_, "poly add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_frame(frame_, o.frame_, "poly sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_frame(a.frame(), b.frame(), "poly mul");
    Poly p(a.frame());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) p.add_term(ma + mb, ca * cb);
    return p;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly p(frame_);
    if (c.is_zero()) return p;
    for (const auto& [m, x] : terms_) p.terms_.emplace(m, x * c);
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(frame_, GaussianRational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= frame_.var_count()) throw std::out_of_range("derivative variable out of range");
    Poly p(frame_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        MultiIndex d = m;
        d[var] -= 1;
        p.add_term(d, c * GaussianRational(static_cast<long>(m[var])));
    }
    return p;
}

GaussianRational Poly::evaluate(const std::vector<GaussianRational>& point) const {
    if (point.size() != frame_.var_count()) throw std::invalid_argument("evaluate: arity mismatch");
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
        total += t;
    }
    return total;
}

std::vector<GaussianRational> Poly::coefficient_row(const MonomialBasis& basis) const {
    std::vector<GaussianRational> row(basis.size());
    for (const auto& [m, c] : terms_) row[basis.index_of(m)] = c;
    return row;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string monomial_string(const VariableFrame& frame, const MultiIndex& m) {
    std::string out;
    for (std::size_t idx : frame.print_order()) {
        if (m[idx] == 0) continue;
        if (!out.empty()) out += "*";
        out += frame.var_name(idx);
        if (m[idx] > 1) out += "^" + std::to_string(m[idx]);
    }
    return out;
}

// Term with a sign-normalized coefficient (the printed separator carries the
// sign); emits forms the parser reads back exactly.
std::string term_string(const VariableFrame& frame, const MultiIndex& m, const GaussianRational& c) {
    if (m.is_constant()) return c.to_string();
    const std::string mono = monomial_string(frame, m);
    if (c.is_rational()) {
        const Rational& r = c.re;
        if (r.is_one()) return mono;
        if (r.numerator() == 1) return mono + "/" + r.denominator().get_str();
        return r.to_string() + "*" + mono;
    }
    if (c.is_imaginary()) {
        if (c.im.is_one()) return "i*" + mono;
        return c.im.to_string() + "i*" + mono;
    }
    return c.to_string() + "*" + mono;  // "(a+bi)*mono"
}

bool term_sign_negative(const GaussianRational& c) {
    if (!c.re.is_zero()) return c.re.sign() < 0;
    return c.im.sign() < 0;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending canonical order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = term_sign_negative(it->second);
        const GaussianRational c = neg ? -it->second : it->second;
        if (out.empty())
            out = (neg ? "-" : "") + term_string(frame_, it->first, c);
        else
            out += (neg ? " - " : " + ") + term_string(frame_, it->first, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// frame changes

Poly change_frame(const Poly& p, const VariableFrame& target, const std::vector<Poly>& images) {
    const std::size_t n = p.frame().var_count();
    if (images.size() != n) throw std::invalid_argument("change_frame: one image per source variable");
    if (target.var_count() != n)
        throw std::invalid_argument("change_frame: variable counts must match");
    for (const auto& img : images) {
        if (img.frame() != target) throw std::invalid_argument("change_frame: image in wrong frame");
        if (img.homogeneous_degree() != std::optional<unsigned>(1))
            throw std::invalid_argument("change_frame: images must be homogeneous of degree 1");
    }
    // invertibility of the linear map
    ExactMatrix lin(n, n);
    for (std::size_t src = 0; src < n; ++src)
        for (const auto& [m, c] : images[src].terms())
            for (std::size_t tgt = 0; tgt < n; ++tgt)
                if (m[tgt] == 1) lin.at(tgt, src) = c;
    if (lin.rank() != n) throw std::invalid_argument("change_frame: substitution is not invertible");

    Poly out(target);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < m[i]; ++e) term = term * images[i];
        out += term;
    }
    return out;
}

Poly apply_linear(const ExactMatrix& a, const Poly& p) {
    const std::size_t n = p.frame().var_count();
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("apply_linear: matrix shape must match frame arity");
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Poly img(p.frame());
        for (std::size_t l = 0; l < n; ++l)
            img += Poly::variable(p.frame(), l).scaled(a.at(l, k));
        images.push_back(std::move(img));
    }
    return change_frame(p, p.frame(), images);
}

Poly frame_quadric(const VariableFrame& frame) {
    Poly q(frame);
    if (frame.kind() == FrameKind::UVZ) {
        // z^2 + 4uv, storage order (z,u,v)
        q += Poly::monomial(frame, MultiIndex{2, 0, 0});
        q += Poly::monomial(frame, MultiIndex{0, 1, 1}, GaussianRational(4));
        return q;
    }
    for (std::size_t i = 0; i < frame.var_count(); ++i) {
        MultiIndex m(frame.var_count());
        m[i] = 2;
        q += Poly::monomial(frame, m);
    }
    return q;
}

Poly quadric_power(const VariableFrame& frame, unsigned s) {
    return frame_quadric(frame).pow(s);
}

}  // namespace apolab
