#include "ballotlab/series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "ballotlab/eulerian.hpp"

namespace ballotlab {

char var_letter(Var v) {
    switch (v) {
        case Var::X: return 'x';
        case Var::Y: return 'y';
        case Var::T: return 't';
        case Var::Z: return 'z';
    }
    return '?';
}

TruncationBox TruncationBox::intersect(const TruncationBox& o) const {
    TruncationBox r = *this;
    for (int i = 0; i < kNumVars; ++i)
        r.bounds[static_cast<size_t>(i)] =
            std::min(bounds[static_cast<size_t>(i)], o.bounds[static_cast<size_t>(i)]);
    r.guard = std::min(guard, o.guard);
    return r;
}

TruncationBox TruncationBox::inflated() const {
    TruncationBox r = *this;
    for (int i = 1; i < kNumVars; ++i) r.bounds[static_cast<size_t>(i)] += guard;
    return r;
}

Series::Series(TruncationBox box, const mpq_class& constant) : box_(box) {
    add_term(Exps{}, constant);
}

Series Series::monomial(const TruncationBox& box, const Exps& m, const mpq_class& c) {
    Series s(box);
    s.add_term(m, c);
    return s;
}

Series Series::var(const TruncationBox& box, Var v) {
    Exps m;
    m[v] = 1;
    return monomial(box, m, 1);
}

mpq_class Series::coeff(const Exps& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void Series::add_term(const Exps& m, const mpq_class& c) {
    if (!box_.contains(m)) return;
    // mpq_class(a,b) does not reduce, and GMP comparisons assume canonical
    // operands (0/2 == 0 is false), so normalize before the zero test.
    mpq_class canon = c;
    canon.canonicalize();
    if (canon == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(m, canon);
    if (!inserted) {
        it->second += canon;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Series Series::truncated(const TruncationBox& box) const {
    Series out(box);
    for (const auto& [m, c] : coeffs_)
        if (box.contains(m)) out.coeffs_.emplace(m, c);
    return out;
}

Series Series::operator-() const {
    Series out(box_);
    for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, -c);
    return out;
}

Series& Series::operator+=(const Series& o) {
    box_ = box_.intersect(o.box_);
    std::erase_if(coeffs_, [&](const auto& kv) { return !box_.contains(kv.first); });
    for (const auto& [m, c] : o.coeffs_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    box_ = box_.intersect(o.box_);
    std::erase_if(coeffs_, [&](const auto& kv) { return !box_.contains(kv.first); });
    for (const auto& [m, c] : o.coeffs_) add_term(m, -c);
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    Series out(a.box_.intersect(b.box_));
    const auto& bounds = out.box_.bounds;
    for (const auto& [ma, ca] : a.coeffs_) {
        for (const auto& [mb, cb] : b.coeffs_) {
            Exps m;
            bool keep = true;
            for (int i = 0; i < kNumVars; ++i) {
                m.e[static_cast<size_t>(i)] =
                    ma.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)];
                if (m.e[static_cast<size_t>(i)] > bounds[static_cast<size_t>(i)]) {
                    keep = false;
                    break;
                }
            }
            if (!keep) continue;
            auto [it, inserted] = out.coeffs_.try_emplace(m, 0);
            it->second += ca * cb;
        }
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Series operator*(const mpq_class& c, Series a) {
    mpq_class canon = c;
    canon.canonicalize();
    if (canon == 0) return Series(a.box_);
    for (auto& [m, v] : a.coeffs_) v *= canon;
    return a;
}

Series operator+(Series a, const mpq_class& c) {
    a.add_term(Exps{}, c);
    return a;
}

Series operator-(Series a, const mpq_class& c) {
    a.add_term(Exps{}, -c);
    return a;
}

namespace {

// Total-degree layering used by the Newton-free recurrences below: layer
// D holds the monomials of total degree D.
using Layered = std::vector<std::vector<std::pair<Exps, mpq_class>>>;

Layered layers_of(const Series& s, int max_deg) {
    Layered out(static_cast<size_t>(max_deg) + 1);
    for (const auto& [m, c] : s.terms()) {
        int d = m.total();
        if (d <= max_deg) out[static_cast<size_t>(d)].emplace_back(m, c);
    }
    return out;
}

int max_total_degree(const TruncationBox& box) {
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) d += box.bounds[static_cast<size_t>(i)];
    return d;
}

// Accumulates c * (layer a) * (layer b) into the degree-D map.
void accumulate_product(std::map<Exps, mpq_class>& acc, const TruncationBox& box,
                        const std::vector<std::pair<Exps, mpq_class>>& la,
                        const std::vector<std::pair<Exps, mpq_class>>& lb) {
    for (const auto& [ma, ca] : la) {
        for (const auto& [mb, cb] : lb) {
            Exps m;
            bool keep = true;
            for (int i = 0; i < kNumVars; ++i) {
                m.e[static_cast<size_t>(i)] =
                    ma.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)];
                if (m.e[static_cast<size_t>(i)] > box.bounds[static_cast<size_t>(i)]) {
                    keep = false;
                    break;
                }
            }
            if (keep) acc[m] += ca * cb;
        }
    }
}

Series from_layers(const TruncationBox& box, Layered& layers) {
    Series out(box);
    for (auto& layer : layers)
        for (auto& [m, c] : layer) out.add_term(m, c);
    return out;
}

}  // namespace

Series inverse(const Series& b) {
    mpq_class b0 = b.constant_term();
    if (b0 == 0) throw std::domain_error("inverse: zero constant term");
    const TruncationBox& box = b.box();
    const int dmax = max_total_degree(box);
    Layered bl = layers_of(b, dmax);
    Layered rl(static_cast<size_t>(dmax) + 1);
    rl[0].emplace_back(Exps{}, 1 / b0);
    for (int d = 1; d <= dmax; ++d) {
        std::map<Exps, mpq_class> acc;
        for (int j = 1; j <= d; ++j)
            accumulate_product(acc, box, bl[static_cast<size_t>(j)], rl[static_cast<size_t>(d - j)]);
        auto& out = rl[static_cast<size_t>(d)];
        for (auto& [m, c] : acc) {
            if (c == 0) continue;
            out.emplace_back(m, -c / b0);
        }
    }
    return from_layers(box, rl);
}

Series div_exact(const Series& a, const Series& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: division by zero series");
    // Factor b = monomial * unit.
    Exps val;
    for (int i = 0; i < kNumVars; ++i) val.e[static_cast<size_t>(i)] = INT32_MAX;
    for (const auto& [m, c] : b.terms())
        for (int i = 0; i < kNumVars; ++i)
            val.e[static_cast<size_t>(i)] =
                std::min(val.e[static_cast<size_t>(i)], m.e[static_cast<size_t>(i)]);
    Series unit(b.box());
    for (const auto& [m, c] : b.terms()) {
        Exps sh = m;
        for (int i = 0; i < kNumVars; ++i) sh.e[static_cast<size_t>(i)] -= val.e[static_cast<size_t>(i)];
        unit.add_term(sh, c);
    }
    if (unit.constant_term() == 0)
        throw std::domain_error("div_exact: divisor is not monomial times unit");
    // Shift a down by the monomial; every term of a must carry it.
    Series shifted(a.box().intersect(b.box()));
    for (const auto& [m, c] : a.terms()) {
        Exps sh = m;
        for (int i = 0; i < kNumVars; ++i) {
            sh.e[static_cast<size_t>(i)] -= val.e[static_cast<size_t>(i)];
            if (sh.e[static_cast<size_t>(i)] < 0)
                throw std::domain_error("div_exact: inexact division (monomial valuation)");
        }
        shifted.add_term(sh, c);
    }
    if (val == Exps{} && unit.term_count() == 1) {
        // Plain rational divisor.
        return mpq_class(1 / unit.constant_term()) * shifted;
    }
    return shifted * inverse(unit);
}

Series sqrt_series(const Series& a) {
    mpq_class a0 = a.constant_term();
    if (a0 == 0) throw std::domain_error("sqrt_series: zero constant term");
    if (a0 < 0 || mpz_perfect_square_p(a0.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(a0.get_den_mpz_t()) == 0)
        throw std::domain_error("sqrt_series: constant term is not the square of a rational");
    mpq_class s0;
    mpz_sqrt(s0.get_num_mpz_t(), a0.get_num_mpz_t());
    mpz_sqrt(s0.get_den_mpz_t(), a0.get_den_mpz_t());
    s0.canonicalize();

    const TruncationBox& box = a.box();
    const int dmax = max_total_degree(box);
    Layered al = layers_of(a, dmax);
    Layered sl(static_cast<size_t>(dmax) + 1);
    sl[0].emplace_back(Exps{}, s0);
    const mpq_class inv2s0 = 1 / (2 * s0);
    for (int d = 1; d <= dmax; ++d) {
        // 2 s_0 s_d = a_d - sum_{j=1}^{d-1} s_j s_{d-j}
        std::map<Exps, mpq_class> acc;
        for (const auto& [m, c] : al[static_cast<size_t>(d)]) acc[m] += c;
        for (int j = 1; j <= d - 1; ++j) {
            std::map<Exps, mpq_class> prod;
            accumulate_product(prod, box, sl[static_cast<size_t>(j)], sl[static_cast<size_t>(d - j)]);
            for (auto& [m, c] : prod) acc[m] -= c;
        }
        auto& out = sl[static_cast<size_t>(d)];
        for (auto& [m, c] : acc)
            if (c != 0) out.emplace_back(m, c * inv2s0);
    }
    return from_layers(box, sl);
}

namespace {

// Euler operator: multiplies each monomial by its total degree.
Series theta(const Series& a) {
    Series out(a.box());
    for (const auto& [m, c] : a.terms()) {
        int d = m.total();
        if (d != 0) out.add_term(m, d * c);
    }
    return out;
}

}  // namespace

Series exp_series(const Series& a) {
    if (a.constant_term() != 0) throw std::domain_error("exp_series: nonzero constant term");
    // theta(g) = g * theta(a) layer by layer.
    const TruncationBox& box = a.box();
    const int dmax = max_total_degree(box);
    Layered tl = layers_of(theta(a), dmax);
    Layered gl(static_cast<size_t>(dmax) + 1);
    gl[0].emplace_back(Exps{}, 1);
    for (int d = 1; d <= dmax; ++d) {
        std::map<Exps, mpq_class> acc;
        for (int j = 1; j <= d; ++j)
            accumulate_product(acc, box, tl[static_cast<size_t>(j)], gl[static_cast<size_t>(d - j)]);
        auto& out = gl[static_cast<size_t>(d)];
        const mpq_class invd(1, d);
        for (auto& [m, c] : acc)
            if (c != 0) out.emplace_back(m, c * invd);
    }
    return from_layers(box, gl);
}

Series ln1p_series(const Series& a) {
    if (a.constant_term() != 0) throw std::domain_error("ln1p_series: nonzero constant term");
    // g = ln(1+a): theta(g) = theta(a) * (1+a)^{-1}, then divide layer D by D.
    Series rate = theta(a) * inverse(a + mpq_class(1));
    Series out(a.box());
    for (const auto& [m, c] : rate.terms()) {
        int d = m.total();
        if (d != 0) out.add_term(m, c / d);
    }
    return out;
}

Series integrate_x(const Series& a) {
    Series out(a.box());
    for (const auto& [m, c] : a.terms()) {
        Exps up = m;
        up[Var::X] += 1;
        out.add_term(up, c / up[Var::X]);
    }
    return out;
}

Series derive_x(const Series& a) {
    Series out(a.box());
    for (const auto& [m, c] : a.terms()) {
        if (m[Var::X] == 0) continue;
        Exps down = m;
        down[Var::X] -= 1;
        out.add_term(down, c * m[Var::X]);
    }
    return out;
}

Series twist_xt(const Series& a) {
    Series out(a.box());
    for (const auto& [m, c] : a.terms()) {
        Exps tw = m;
        tw[Var::T] += m[Var::X];
        if (tw[Var::T] > a.box().bound(Var::T))
            throw std::domain_error("twist_xt: t exponent overflows the box");
        out.add_term(tw, c);
    }
    return out;
}

Series reflect_t(const Series& a) {
    Series out(a.box());
    for (const auto& [m, c] : a.terms()) {
        if (m[Var::T] > m[Var::X])
            throw std::domain_error("reflect_t: monomial with e_t > e_x has no image");
        Exps rf = m;
        rf[Var::T] = m[Var::X] - m[Var::T];
        out.add_term(rf, c);
    }
    return out;
}

Series d_trunc(const Series& a, Var small, Var big) {
    if (small == big) throw std::invalid_argument("d_trunc: variables must differ");
    Series out(a.box());
    for (const auto& [m, c] : a.terms())
        if (2 * m[small] <= m[big] - 1) out.add_term(m, c);
    return out;
}

Series d_trunc_complement(const Series& a, Var small, Var big) {
    if (small == big) throw std::invalid_argument("d_trunc_complement: variables must differ");
    Series out(a.box());
    for (const auto& [m, c] : a.terms())
        if (2 * m[small] > m[big] - 1) out.add_term(m, c);
    return out;
}

Series specialize(const Series& a, Var v, const mpq_class& value) {
    Series out(a.box());
    for (const auto& [m, c] : a.terms()) {
        Exps red = m;
        red[v] = 0;
        mpq_class scaled = c;
        for (int k = 0; k < m[v]; ++k) scaled *= value;
        out.add_term(red, scaled);
    }
    return out;
}

mpz_class egf_count(const Series& a, const Exps& m) {
    mpq_class v = a.coeff(m) * mpq_class(factorial(m[Var::X]));
    if (v.get_den() != 1)
        throw std::domain_error("egf_count: e_x! * coefficient is not an integer");
    return v.get_num();
}

std::string dump(const Series& a) {
    std::ostringstream os;
    const auto& b = a.box();
    os << "# box x<=" << b.bound(Var::X) << " y<=" << b.bound(Var::Y) << " t<=" << b.bound(Var::T)
       << " z<=" << b.bound(Var::Z) << " guard=" << b.guard << "\n";
    for (const auto& [m, c] : a.terms()) {
        os << m[Var::X] << ' ' << m[Var::Y] << ' ' << m[Var::T] << ' ' << m[Var::Z] << ' '
           << c.get_num().get_str() << '/' << c.get_den().get_str() << '\n';
    }
    return os.str();
}

}  // namespace ballotlab
