#include "stringcubes/twistedcube.hpp"

#include <algorithm>
#include <sstream>

namespace stringcubes {

namespace {

std::string sigma_string(std::uint32_t bits, int n)
{
    // Bit t (from the most significant of the n used bits) is sigma_{t+1};
    // 0 encodes '-'. Counting up therefore walks sign vectors in
    // lexicographic order with '-' < '+'.
    std::string s(n, '-');
    for (int t = 0; t < n; ++t)
        if (bits & (1u << (n - 1 - t)))
            s[t] = '+';
    return s;
}

std::vector<long long> cartier_vector(const std::vector<AffineForm>& forms,
                                      std::uint32_t bits, int n)
{
    std::vector<long long> r(n, 0);
    for (int i = n; i >= 1; --i) {
        const bool minus = !(bits & (1u << (n - i)));
        if (minus)
            r[i - 1] = forms[i - 1].eval_int(r);
    }
    return r;
}

}  // namespace

WordMult::WordMult(RootDatum d, Word w, std::vector<long long> m)
    : datum(std::move(d)), word(std::move(w)), mult(std::move(m))
{
    validate_word(datum, word);
    if (mult.size() != static_cast<std::size_t>(word.size()))
        throw std::invalid_argument("multiplicity list length does not match word length");
    for (long long v : mult)
        if (v < 0)
            throw std::domain_error("multiplicities must be non-negative");
}

WordMult WordMult::scaled(long long k) const
{
    if (k < 0)
        throw std::domain_error("scale factor must be non-negative");
    std::vector<long long> m = mult;
    for (auto& v : m)
        v *= k;
    return WordMult(datum, word, std::move(m));
}

Rational AffineForm::eval(const VectorXr& x) const
{
    Rational s = constant;
    for (std::size_t l = 0; l < coeffs.size(); ++l)
        if (coeffs[l] != 0)
            s += Rational(coeffs[l]) * x(static_cast<Eigen::Index>(l));
    return s;
}

long long AffineForm::eval_int(const std::vector<long long>& x) const
{
    long long s = constant;
    for (std::size_t l = 0; l < coeffs.size(); ++l)
        s += coeffs[l] * x[l];
    return s;
}

std::vector<AffineForm> a_forms(const WordMult& wm)
{
    const int n = wm.size();
    std::vector<AffineForm> forms(n);
    for (int j = 1; j <= n; ++j) {
        AffineForm& f = forms[j - 1];
        f.index = j;
        f.constant = wm.mult[j - 1];
        f.coeffs.assign(n, 0);
        const int letter_j = wm.word.letters[j - 1];
        for (int l = j + 1; l <= n; ++l) {
            const int letter_l = wm.word.letters[l - 1];
            if (letter_l == letter_j)
                f.constant += wm.mult[l - 1];
            f.coeffs[l - 1] = -wm.datum.pairing_entry(letter_j, letter_l);
        }
    }
    return forms;
}

HPolytope twisted_cube(const WordMult& wm)
{
    const int n = wm.size();
    const auto forms = a_forms(wm);
    std::vector<Halfspace> hs;
    hs.reserve(2 * n);
    for (int j = 1; j <= n; ++j) {
        VectorXz lower = VectorXz::Zero(n);
        lower(j - 1) = -1;
        hs.emplace_back(std::move(lower), Rational(0));
        VectorXz upper = VectorXz::Zero(n);
        upper(j - 1) = 1;
        for (int l = j + 1; l <= n; ++l)
            upper(l - 1) = -forms[j - 1].coeffs[l - 1];
        hs.emplace_back(std::move(upper), Rational(forms[j - 1].constant));
    }
    return HPolytope(n, std::move(hs));
}

HPolytope reverse_coords(const HPolytope& P)
{
    const int n = P.dim();
    std::vector<Halfspace> hs;
    hs.reserve(P.halfspaces().size());
    for (const auto& h : P.halfspaces())
        hs.emplace_back(h.normal.reverse().eval(), h.bound);
    return HPolytope(n, std::move(hs));
}

HPolytope negate_coords(const HPolytope& P)
{
    std::vector<Halfspace> hs;
    hs.reserve(P.halfspaces().size());
    for (const auto& h : P.halfspaces())
        hs.emplace_back((-h.normal).eval(), h.bound);
    return HPolytope(P.dim(), std::move(hs));
}

const std::vector<long long>& CartierTable::at(const std::string& sigma) const
{
    for (const auto& [s, r] : entries)
        if (s == sigma)
            return r;
    throw std::invalid_argument("no Cartier entry for sign vector " + sigma);
}

CartierTable cartier_data(const WordMult& wm)
{
    const int n = wm.size();
    if (n > 24)
        throw ResourceLimitError("Cartier table has 2^" + std::to_string(n) +
                                 " entries; refusing beyond n = 24");
    const auto forms = a_forms(wm);
    CartierTable table;
    table.n = n;
    table.entries.reserve(1u << n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        table.entries.emplace_back(sigma_string(bits, n), cartier_vector(forms, bits, n));
    return table;
}

long long max_cartier_coordinate(const WordMult& wm, int ell)
{
    const int n = wm.size();
    if (ell < 1 || ell > n)
        throw std::invalid_argument("coordinate index out of range");
    const auto forms = a_forms(wm);
    // r_{sigma,ell} depends only on sigma_ell..sigma_n, so enumerate just the
    // suffix sign choices.
    const int suffix = n - ell + 1;
    long long best = 0;  // sigma_ell = '+' always yields 0
    for (std::uint32_t bits = 0; bits < (1u << suffix); ++bits) {
        std::vector<long long> r(n, 0);
        for (int i = n; i >= ell; --i) {
            const bool minus = !(bits & (1u << (n - i)));
            if (minus)
                r[i - 1] = forms[i - 1].eval_int(r);
        }
        best = std::max(best, r[ell - 1]);
    }
    return best;
}

std::string ConditionPCertificate::witness_text() const
{
    if (holds)
        return "condition (P) holds";
    std::ostringstream os;
    os << "k=" << violating_index << " x=(";
    for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i];
    os << ") A_" << violating_index << "=" << value;
    return os.str();
}

ConditionPCertificate satisfies_P(const WordMult& wm)
{
    const int n = wm.size();
    CartierTable table = cartier_data(wm);
    ConditionPCertificate cert;
    int best_k = 0;
    const std::vector<long long>* best_r = nullptr;
    std::string best_sigma;
    for (const auto& [sigma, r] : table.entries) {
        for (int i = n; i > best_k; --i) {
            if (r[i - 1] < 0) {
                best_k = i;
                best_r = &r;
                best_sigma = sigma;
                break;
            }
        }
    }
    if (best_k == 0) {
        cert.holds = true;
        cert.table = std::move(table);
        return cert;
    }
    cert.holds = false;
    cert.violating_index = best_k;
    cert.sigma = best_sigma;
    cert.witness.assign(best_r->begin() + best_k, best_r->end());
    cert.value = (*best_r)[best_k - 1];
    return cert;
}

namespace {

// Scan the region {0 <= x_l <= A_l, l > k} on the grid (1/D)Z from l = n
// down; returns true when A_k stays non-negative on all of it.
bool scan_region(const std::vector<AffineForm>& forms, int k, int n, long long D,
                 std::vector<long long>& y, std::uint64_t& budget)
{
    // y holds D-scaled coordinates; D * A_l is integral on the grid.
    auto scaled_a = [&](int l) {
        long long s = forms[l - 1].constant * D;
        for (int t = l + 1; t <= n; ++t)
            s += forms[l - 1].coeffs[t - 1] * y[t - 1];
        return s;
    };
    auto rec = [&](auto&& self, int l) -> bool {
        if (l == k) {
            if (budget == 0)
                throw ResourceLimitError("direct (P) scan exceeded its candidate cap");
            --budget;
            return scaled_a(k) >= 0;
        }
        const long long hi = scaled_a(l);
        for (long long v = 0; v <= hi; ++v) {
            y[l - 1] = v;
            if (!self(self, l - 1))
                return false;
        }
        y[l - 1] = 0;
        return true;
    };
    return rec(rec, n);
}

}  // namespace

bool direct_P_oracle(const WordMult& wm, int denominator_cap, std::uint64_t candidate_cap)
{
    if (denominator_cap < 1)
        throw std::invalid_argument("denominator cap must be positive");
    const int n = wm.size();
    const auto forms = a_forms(wm);
    std::uint64_t budget = candidate_cap;
    // (P-n) is the sign of m_n, guaranteed by the WordMult invariant; the
    // remaining conditions are the quantified ones.
    std::vector<long long> y(n, 0);
    for (int k = n - 1; k >= 1; --k) {
        std::fill(y.begin(), y.end(), 0);
        if (!scan_region(forms, k, n, denominator_cap, y, budget))
            return false;
    }
    return true;
}

std::vector<std::vector<long long>> twisted_cube_lattice_points(const WordMult& wm,
                                                                std::uint64_t cap)
{
    const int n = wm.size();
    const auto forms = a_forms(wm);
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(n, 0);
    std::uint64_t budget = cap;
    auto rec = [&](auto&& self, int l) -> void {
        if (l == 0) {
            if (budget == 0)
                throw ResourceLimitError("twisted cube enumeration exceeded its cap");
            --budget;
            out.push_back(x);
            return;
        }
        long long hi = forms[l - 1].constant;
        for (int t = l + 1; t <= n; ++t)
            hi += forms[l - 1].coeffs[t - 1] * x[t - 1];
        for (long long v = 0; v <= hi; ++v) {
            x[l - 1] = v;
            self(self, l - 1);
        }
        x[l - 1] = 0;
    };
    if (n == 0) {
        out.push_back({});
        return out;
    }
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stringcubes
