#include "stringcubes/rootsys.hpp"

#include <deque>
#include <set>
#include <string>

namespace stringcubes {

namespace {

std::string family_name(Family f, int rank)
{
    return std::string(1, static_cast<char>(f)) + std::to_string(rank);
}

void check_admissible(Family family, int rank)
{
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw std::domain_error("inadmissible rank for family " + family_name(family, rank));
}

// Reflect a root-basis coordinate vector by s_i (0-based i).
void reflect_root_coords(const Eigen::MatrixXi& cartan, int i, Eigen::VectorXi& a)
{
    int pair = 0;
    for (int j = 0; j < cartan.cols(); ++j)
        pair += cartan(i, j) * a(j);
    a(i) -= pair;
}

std::vector<Eigen::VectorXi> positive_roots_of(const Eigen::MatrixXi& cartan)
{
    const int n = static_cast<int>(cartan.rows());
    std::set<std::vector<int>> seen;
    std::deque<Eigen::VectorXi> queue;
    std::vector<Eigen::VectorXi> roots;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
        e(i) = 1;
        seen.insert({e.data(), e.data() + n});
        queue.push_back(e);
        roots.push_back(e);
    }
    while (!queue.empty()) {
        Eigen::VectorXi a = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXi b = a;
            reflect_root_coords(cartan, i, b);
            if ((b.array() < 0).any())
                continue;
            std::vector<int> key(b.data(), b.data() + n);
            if (seen.insert(key).second) {
                queue.push_back(b);
                roots.push_back(b);
            }
        }
    }
    return roots;
}

}  // namespace

Family family_from_char(char c)
{
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default:
            throw std::invalid_argument(std::string("unknown family: ") + c);
    }
}

Eigen::MatrixXi cartan_matrix(Family family, int rank)
{
    check_admissible(family, rank);
    Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(rank, rank);
    auto bond = [&c](int i, int j, int cij, int cji) {
        // 1-based nodes: c(i,j) = <alpha_j, alpha_i^vee>.
        c(i - 1, j - 1) = cij;
        c(j - 1, i - 1) = cji;
    };
    auto chain = [&bond](int from, int to) {
        for (int i = from; i < to; ++i)
            bond(i, i + 1, -1, -1);
    };
    switch (family) {
        case Family::A:
            chain(1, rank);
            break;
        case Family::B:
            // alpha_rank is the short root.
            chain(1, rank - 1);
            bond(rank - 1, rank, -1, -2);
            break;
        case Family::C:
            // alpha_rank is the long root.
            chain(1, rank - 1);
            bond(rank - 1, rank, -2, -1);
            break;
        case Family::D:
            chain(1, rank - 1);
            bond(rank - 2, rank, -1, -1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-..., node 2 hangs off node 4.
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            for (int i = 3; i < rank; ++i)
                bond(i, i + 1, -1, -1);
            break;
        case Family::F:
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2);
            bond(3, 4, -1, -1);
            break;
        case Family::G:
            // alpha_1 long, alpha_2 short.
            bond(1, 2, -1, -3);
            break;
    }
    return c;
}

void validate_word(const RootDatum& datum, const Word& word)
{
    for (int letter : word.letters)
        if (letter < 1 || letter > datum.rank)
            throw std::domain_error("word letter " + std::to_string(letter) +
                                    " outside [1, " + std::to_string(datum.rank) + "]");
}

int pairing(const RootDatum& datum, const Weight& lambda, int i)
{
    if (i < 1 || i > datum.rank)
        throw std::domain_error("pairing index out of range: " + std::to_string(i));
    if (lambda.coords.size() != datum.rank)
        throw std::invalid_argument("weight length does not match rank");
    return lambda.coords(i - 1);
}

Weight root_to_weight_coords(const RootDatum& datum, const Eigen::VectorXi& a)
{
    if (a.size() != datum.rank)
        throw std::invalid_argument("root coordinate length does not match rank");
    return Weight{datum.cartan * a};
}

Weight apply_simple_reflection(const RootDatum& datum, int i, const Weight& lambda)
{
    const int li = pairing(datum, lambda, i);
    Eigen::VectorXi alpha_i = Eigen::VectorXi::Zero(datum.rank);
    alpha_i(i - 1) = 1;
    const Weight alpha = root_to_weight_coords(datum, alpha_i);
    return Weight{lambda.coords - li * alpha.coords};
}

std::vector<Eigen::VectorXi> positive_roots(const RootDatum& datum)
{
    return positive_roots_of(datum.cartan);
}

std::vector<Eigen::VectorXi> positive_coroots(const RootDatum& datum)
{
    return positive_roots_of(datum.cartan.transpose());
}

int num_positive_roots(const RootDatum& datum)
{
    return static_cast<int>(positive_roots(datum).size());
}

bool is_reduced(const RootDatum& datum, const Word& word)
{
    validate_word(datum, word);
    const int n = word.size();
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXi v = Eigen::VectorXi::Zero(datum.rank);
        v(word.letters[j] - 1) = 1;
        for (int t = j - 1; t >= 0; --t)
            reflect_root_coords(datum.cartan, word.letters[t] - 1, v);
        if ((v.array() < 0).any())
            return false;
    }
    return true;
}

bool is_reduced_for_longest(const RootDatum& datum, const Word& word)
{
    return word.size() == num_positive_roots(datum) && is_reduced(datum, word);
}

Integer weyl_dim(const RootDatum& datum, const Weight& lambda)
{
    if (lambda.coords.size() != datum.rank)
        throw std::invalid_argument("weight length does not match rank");
    if (!lambda.dominant())
        throw std::domain_error("weyl_dim requires a dominant weight");
    Integer num = 1, den = 1;
    for (const auto& b : positive_coroots(datum)) {
        Integer top = 0, bottom = 0;
        for (int i = 0; i < datum.rank; ++i) {
            top += Integer(b(i)) * (lambda.coords(i) + 1);
            bottom += b(i);
        }
        num *= top;
        den *= bottom;
    }
    Rational dim(num, den);
    if (!is_integral(dim))
        throw std::logic_error("Weyl dimension did not reduce to an integer");
    return numerator(dim);
}

}  // namespace stringcubes
