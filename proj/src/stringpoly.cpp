#include "stringcubes/stringpoly.hpp"

#include <algorithm>
#include <sstream>

namespace stringcubes {

PsiTrace psi_trace(const WordMult& wm, const VectorXr& x)
{
    const int n = wm.size();
    if (x.size() != n)
        throw std::invalid_argument("psi_trace: point length does not match word length");
    const auto& letters = wm.word.letters;

    PsiTrace trace;
    trace.levels.assign(n, VectorXr());
    if (n == 0)
        return trace;
    trace.levels[n - 1] = x;
    trace.psi.assign(n >= 2 ? n - 1 : 0, {});

    for (int k = n; k >= 2; --k) {
        const VectorXr& xk = trace.levels[k - 1];
        std::vector<Rational> psi_k(k - 1);
        for (int i = 1; i <= k - 1; ++i) {
            if (letters[i - 1] == letters[k - 1]) {
                bool first = true;
                Rational best = 0;
                for (int j = i + 1; j <= k; ++j) {
                    if (letters[j - 1] != letters[k - 1])
                        continue;
                    Rational s = xk(j - 1);
                    for (int t = i + 1; t <= j; ++t)
                        s -= Rational(wm.datum.pairing_entry(letters[k - 1], letters[t - 1])) * xk(t - 1);
                    for (int t = i; t <= j - 1; ++t)
                        if (letters[t - 1] == letters[k - 1])
                            s += wm.mult[t - 1];
                    trace.s_values.push_back({i, j, k, s});
                    if (first || s > best) {
                        best = s;
                        first = false;
                    }
                }
                psi_k[i - 1] = best;  // j = k always qualifies, so never empty
            } else {
                psi_k[i - 1] = xk(i - 1);
            }
        }
        VectorXr next(k - 1);
        for (int i = 1; i <= k - 1; ++i)
            next(i - 1) = std::min(xk(i - 1), psi_k[i - 1]);
        trace.levels[k - 2] = std::move(next);
        trace.psi[k - 2] = std::move(psi_k);
    }
    return trace;
}

std::string StringMembership::describe() const
{
    switch (kind) {
        case Violation::None:
            return "inside";
        case Violation::Psi: {
            std::ostringstream os;
            os << "psi violation at (k,i)=(" << k << "," << i << ")";
            return os.str();
        }
        case Violation::Box: {
            std::ostringstream os;
            os << "box violation at j=" << box_index;
            return os.str();
        }
    }
    return {};
}

StringMembership in_delta(const WordMult& wm, const VectorXr& x)
{
    const int n = wm.size();
    StringMembership result;
    const PsiTrace trace = psi_trace(wm, x);
    for (int k = n; k >= 2; --k) {
        for (int i = 1; i <= k - 1; ++i) {
            if (trace.psi_at(k, i) < 0) {
                result.kind = StringMembership::Violation::Psi;
                result.k = k;
                result.i = i;
                return result;
            }
        }
    }
    const auto forms = a_forms(wm);
    for (int j = 1; j <= n; ++j) {
        if (x(j - 1) < 0 || x(j - 1) > forms[j - 1].eval(x)) {
            result.kind = StringMembership::Violation::Box;
            result.box_index = j;
            return result;
        }
    }
    result.inside = true;
    return result;
}

bool in_delta_int(const WordMult& wm, const std::vector<long long>& x)
{
    const int n = wm.size();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("in_delta_int: point length does not match word length");
    const auto& letters = wm.word.letters;

    std::vector<long long> cur = x;
    for (int k = n; k >= 2; --k) {
        std::vector<long long> next(k - 1);
        for (int i = 1; i <= k - 1; ++i) {
            long long psi;
            if (letters[i - 1] == letters[k - 1]) {
                bool first = true;
                psi = 0;
                for (int j = i + 1; j <= k; ++j) {
                    if (letters[j - 1] != letters[k - 1])
                        continue;
                    long long s = cur[j - 1];
                    for (int t = i + 1; t <= j; ++t)
                        s -= static_cast<long long>(wm.datum.pairing_entry(letters[k - 1], letters[t - 1])) * cur[t - 1];
                    for (int t = i; t <= j - 1; ++t)
                        if (letters[t - 1] == letters[k - 1])
                            s += wm.mult[t - 1];
                    if (first || s > psi) {
                        psi = s;
                        first = false;
                    }
                }
            } else {
                psi = cur[i - 1];
            }
            if (psi < 0)
                return false;
            next[i - 1] = std::min(cur[i - 1], psi);
        }
        cur = std::move(next);
    }
    const auto forms = a_forms(wm);
    for (int j = 1; j <= n; ++j)
        if (x[j - 1] < 0 || x[j - 1] > forms[j - 1].eval_int(x))
            return false;
    return true;
}

std::vector<long long> m_of_lambda(const RootDatum& datum, const Word& word,
                                   const Weight& lambda)
{
    validate_word(datum, word);
    if (lambda.coords.size() != datum.rank)
        throw std::invalid_argument("weight length does not match rank");
    if (!lambda.dominant())
        throw std::domain_error("m_of_lambda requires a dominant weight");
    std::vector<long long> m(word.size(), 0);
    for (int a = 1; a <= datum.rank; ++a) {
        for (int pos = word.size(); pos >= 1; --pos) {
            if (word.letters[pos - 1] == a) {
                m[pos - 1] = lambda.coords(a - 1);
                break;
            }
        }
    }
    return m;
}

std::vector<std::vector<long long>> delta_lattice_points(const WordMult& wm,
                                                         long long dilate,
                                                         std::uint64_t cap)
{
    if (dilate < 1)
        throw std::domain_error("dilate must be a positive integer");
    const WordMult scaled = wm.scaled(dilate);
    std::vector<std::vector<long long>> out;
    for (auto& p : twisted_cube_lattice_points(scaled, cap))
        if (in_delta_int(scaled, p))
            out.push_back(std::move(p));
    return out;
}

DeltaEqualsPEvidence delta_equals_P(const WordMult& wm, int max_dilate, std::uint64_t cap)
{
    const ConditionPCertificate cert = satisfies_P(wm);
    if (!cert.holds)
        throw std::domain_error("delta_equals_P requires condition (P); certificate: " +
                                cert.witness_text());

    DeltaEqualsPEvidence ev;
    ev.vertices_inside = true;
    const VertexSet V = vertices(twisted_cube(wm));
    for (const auto& v : V.points) {
        const StringMembership memb = in_delta(wm, v);
        if (!memb.inside) {
            ev.vertices_inside = false;
            std::ostringstream os;
            os << memb.describe() << " at vertex (";
            for (Eigen::Index i = 0; i < v.size(); ++i)
                os << (i ? "," : "") << to_fraction_string(v(i));
            os << ")";
            ev.vertex_witness = os.str();
            break;
        }
    }

    bool counts_match = true;
    for (int k = 1; k <= max_dilate; ++k) {
        const WordMult scaled = wm.scaled(k);
        DeltaEqualsPEvidence::Count c;
        c.dilate = k;
        for (const auto& p : twisted_cube_lattice_points(scaled, cap)) {
            ++c.cube_points;
            if (in_delta_int(scaled, p))
                ++c.delta_points;
        }
        counts_match = counts_match && (c.cube_points == c.delta_points);
        ev.counts.push_back(c);
    }
    ev.equal = ev.vertices_inside && counts_match;
    return ev;
}

}  // namespace stringcubes
