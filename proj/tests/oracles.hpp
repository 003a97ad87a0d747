/**
 * Test-only oracles, independent of the implementation paths they check:
 * a brute-force Weyl group table for reduced-word questions, a pairing-based
 * evaluator for the A forms, and a deterministic random instance generator.
 */

#pragma once

#include <map>
#include <random>
#include <vector>

#include "stringcubes/twistedcube.hpp"

namespace oracles {

using namespace stringcubes;

/** The full Weyl group as matrices acting on root-basis coordinates, with
 *  Coxeter lengths, built by breadth-first closure. Small ranks only. */
class WeylTable {
  public:
    explicit WeylTable(const RootDatum& datum) : datum_(datum)
    {
        const int n = datum.rank;
        std::vector<Eigen::MatrixXi> gens(n);
        for (int i = 0; i < n; ++i) {
            Eigen::MatrixXi S = Eigen::MatrixXi::Identity(n, n);
            for (int j = 0; j < n; ++j)
                S(i, j) -= datum.cartan(i, j);
            gens[i] = S;
        }
        std::map<std::vector<int>, int> length;
        std::vector<Eigen::MatrixXi> frontier{Eigen::MatrixXi::Identity(n, n)};
        length[key(frontier[0])] = 0;
        int len = 0;
        while (!frontier.empty()) {
            ++len;
            std::vector<Eigen::MatrixXi> next;
            for (const auto& w : frontier) {
                for (int i = 0; i < n; ++i) {
                    Eigen::MatrixXi v = w * gens[i];
                    auto [it, fresh] = length.emplace(key(v), len);
                    if (fresh)
                        next.push_back(v);
                }
            }
            frontier = std::move(next);
        }
        length_ = std::move(length);
        gens_ = std::move(gens);
    }

    std::size_t order() const { return length_.size(); }

    int length_of(const Word& word) const
    {
        const int n = datum_.rank;
        Eigen::MatrixXi w = Eigen::MatrixXi::Identity(n, n);
        for (int letter : word.letters)
            w = w * gens_[letter - 1];
        return length_.at(key(w));
    }

    bool reduced(const Word& word) const
    {
        return length_of(word) == word.size();
    }

  private:
    static std::vector<int> key(const Eigen::MatrixXi& m)
    {
        return std::vector<int>(m.data(), m.data() + m.size());
    }

    RootDatum datum_;
    std::vector<Eigen::MatrixXi> gens_;
    std::map<std::vector<int>, int> length_;
};

/** A_j evaluated through the pairing route: build the weight
 *  sum m_l w_{i_l} - sum x_l alpha_{i_l} in fundamental coordinates and
 *  extract the i_j-th one. Independent of the closed form in a_forms. */
inline Rational a_form_by_pairing(const WordMult& wm, int j, const VectorXr& x)
{
    const int rank = wm.datum.rank;
    const int n = wm.size();
    VectorXr coords = VectorXr::Zero(rank);
    for (int l = j; l <= n; ++l)
        coords(wm.word.letters[l - 1] - 1) += wm.mult[l - 1];
    for (int l = j + 1; l <= n; ++l) {
        Eigen::VectorXi e = Eigen::VectorXi::Zero(rank);
        e(wm.word.letters[l - 1] - 1) = 1;
        const Weight alpha = root_to_weight_coords(wm.datum, e);
        for (int t = 0; t < rank; ++t)
            coords(t) -= x(l - 1) * Rational(alpha.coords(t));
    }
    return coords(wm.word.letters[j - 1] - 1);
}

struct TestFamily {
    Family family;
    int rank;
};

inline const std::vector<TestFamily>& instance_families()
{
    static const std::vector<TestFamily> fams = {
        {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::G, 2}};
    return fams;
}

/** Random reduced word of length at most max_len (greedy with retries, so
 *  occasionally shorter). */
inline Word random_reduced_word(const RootDatum& datum, int max_len, std::mt19937& rng)
{
    std::uniform_int_distribution<int> letter(1, datum.rank);
    Word word;
    for (int step = 0; step < max_len; ++step) {
        bool extended = false;
        for (int attempt = 0; attempt < 8; ++attempt) {
            word.letters.push_back(letter(rng));
            if (is_reduced(datum, word)) {
                extended = true;
                break;
            }
            word.letters.pop_back();
        }
        if (!extended)
            break;
    }
    return word;
}

struct RandomInstance {
    RootDatum datum;
    Word word;
    std::vector<long long> mult;
};

inline RandomInstance random_instance(std::mt19937& rng, int max_len = 6,
                                      long long max_mult = 3)
{
    const auto& fams = instance_families();
    std::uniform_int_distribution<std::size_t> pick(0, fams.size() - 1);
    const TestFamily tf = fams[pick(rng)];
    RootDatum datum = RootDatum::create(tf.family, tf.rank);
    std::uniform_int_distribution<int> len(1, max_len);
    Word word = random_reduced_word(datum, len(rng), rng);
    std::uniform_int_distribution<long long> mval(0, max_mult);
    std::vector<long long> mult(word.size());
    for (auto& v : mult)
        v = mval(rng);
    return {std::move(datum), std::move(word), std::move(mult)};
}

}  // namespace oracles
