#include "qsu2/scalar.hpp"

#include <sstream>

namespace qsu2 {

std::string gauss_to_string(const GaussRat& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool have_re = (g.re != 0);
    if (have_re) os << g.re.get_str();
    if (g.im != 0) {
        if (have_re && g.im > 0) os << "+";
        if (g.im == 1)
            os << "i";
        else if (g.im == -1)
            os << "-i";
        else
            os << g.im.get_str() << "i";
    }
    return os.str();
}

namespace {

std::string mu_poly_to_string(const MuPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        GaussRat c = p.coeff(d);
        if (c.is_zero()) continue;
        std::string cs = gauss_to_string(c);
        bool composite = cs.find('+') != std::string::npos ||
                         cs.find('-', 1) != std::string::npos;
        if (!first) {
            if (!composite && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        if (composite) cs = "(" + cs + ")";
        if (d == 0) {
            os << cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                os << "-";
            else
                os << cs << " ";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace

std::string ms_to_string(const MuScalar& s, const std::string& var) {
    if (s.is_zero()) return "0";
    std::string n = mu_poly_to_string(s.num(), var);
    if (s.den().degree() == 0 && s.den().coeff(0) == GaussRat(1)) return n;
    std::string d = mu_poly_to_string(s.den(), var);
    bool nc = n.find(' ') != std::string::npos;
    bool dc = d.find(' ') != std::string::npos || d.find('^') != std::string::npos ||
              d.size() > 2;
    return (nc ? "(" + n + ")" : n) + "/" + (dc ? "(" + d + ")" : d);
}

std::string xpoly_to_string(const XPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        MuScalar c = p.coeff(d);
        if (c.is_zero()) continue;
        std::string cs = ms_to_string(c);
        if (!first) os << " + ";
        first = false;
        bool composite = cs.find(' ') != std::string::npos;
        if (d == 0) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << " ";
        os << var;
        if (d > 1) os << "^" << d;
    }
    return os.str();
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    Int n = q.get_num(), d = q.get_den();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rat(rn, rd);
}

namespace {

// sqrt of a polynomial with real Gaussian-rational coefficients, via the
// coefficient recursion for p = r^2.
std::optional<MuPoly> poly_sqrt(const MuPoly& p) {
    if (p.is_zero()) return MuPoly();
    if (p.degree() % 2 != 0) return std::nullopt;
    for (auto& c : p.coeffs())
        if (!c.is_real()) return std::nullopt;
    auto lead = rat_sqrt(p.leading().re);
    if (!lead) return std::nullopt;
    int m = p.degree() / 2;
    std::vector<GaussRat> r(m + 1);
    r[m] = GaussRat(*lead);
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of x^(k+m) in r^2: sum_{i+j=k+m} r_i r_j
        Rat acc = 0;
        for (int i = k + 1; i <= m; ++i) {
            int j = k + m - i;
            if (j > m || j < 0 || j <= k) continue;
            acc += r[i].re * r[j].re;
        }
        // includes the unknown r_k twice: p_{k+m} = 2 r_m r_k + acc (terms i,j>k)
        Rat need = p.coeff(k + m).re - acc;
        r[k] = GaussRat(need / (2 * r[m].re));
    }
    MuPoly cand{std::vector<GaussRat>(r)};
    if (cand * cand != p) return std::nullopt;
    return cand;
}

}  // namespace

std::optional<MuScalar> ms_sqrt(const MuScalar& s) {
    if (s.is_zero()) return MuScalar();
    auto n = poly_sqrt(s.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(s.den());
    if (!d) return std::nullopt;
    return MuScalar(*n, *d);
}

}  // namespace qsu2
