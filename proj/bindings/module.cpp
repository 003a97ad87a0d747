/**
 * Python bindings for the main operations. Exact rationals cross the
 * boundary as "p/q" strings (ints where a value is integral by
 * construction); the python package wraps them into fractions.Fraction.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stringcubes/serialize.hpp"

namespace py = pybind11;
using namespace stringcubes;

namespace {

py::object json_to_py(const Json& j)
{
    if (j.is_null())
        return py::none();
    if (j.is_boolean())
        return py::bool_(j.get<bool>());
    if (j.is_number_unsigned())
        return py::int_(j.get<std::uint64_t>());
    if (j.is_number_integer())
        return py::int_(j.get<long long>());
    if (j.is_string())
        return py::str(j.get<std::string>());
    if (j.is_array()) {
        py::list out;
        for (const auto& item : j)
            out.append(json_to_py(item));
        return out;
    }
    py::dict out;
    for (const auto& [key, value] : j.items())
        out[py::str(key)] = json_to_py(value);
    return out;
}

py::object big_int(const Integer& v)
{
    return py::module_::import("builtins").attr("int")(v.str());
}

RootDatum datum_of(const std::string& family, int rank)
{
    if (family.size() != 1)
        throw std::invalid_argument("family must be a single letter A..G");
    return RootDatum::create(family_from_char(family[0]), rank);
}

Weight weight_of(const RootDatum& datum, const std::vector<int>& coords)
{
    if (static_cast<int>(coords.size()) != datum.rank)
        throw std::invalid_argument("weight length does not match rank");
    Eigen::VectorXi v(datum.rank);
    for (int i = 0; i < datum.rank; ++i)
        v(i) = coords[i];
    return Weight{v};
}

WordMult wm_of(const std::string& family, int rank, const std::vector<int>& word,
               const std::vector<long long>& mult)
{
    return WordMult(datum_of(family, rank), Word{word}, mult);
}

VectorXr point_of(const std::vector<std::string>& coords)
{
    VectorXr x(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i)
        x(static_cast<Eigen::Index>(i)) = rational_from_string(coords[i]);
    return x;
}

HPolytope polytope_of(int dim, const std::vector<std::pair<std::vector<long long>, std::string>>& halfspaces)
{
    std::vector<Halfspace> hs;
    hs.reserve(halfspaces.size());
    for (const auto& [normal, bound] : halfspaces) {
        if (static_cast<int>(normal.size()) != dim)
            throw std::invalid_argument("halfspace normal length does not match dim");
        VectorXz nz(dim);
        for (int i = 0; i < dim; ++i)
            nz(i) = Integer(normal[i]);
        hs.emplace_back(std::move(nz), rational_from_string(bound));
    }
    return HPolytope(dim, std::move(hs));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact polytopes attached to words in root systems: twisted cubes, "
              "generalized string polytopes, condition (P), resolutions.";

    // Root system data.
    m.def("cartan_matrix", [](const std::string& family, int rank) {
        const auto c = cartan_matrix(family_from_char(family.at(0)), rank);
        std::vector<std::vector<int>> rows(rank, std::vector<int>(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                rows[i][j] = c(i, j);
        return rows;
    }, py::arg("family"), py::arg("rank"),
       "Cartan matrix with entries c[i][j] = <alpha_j, alpha_i^vee>");

    m.def("pairing", [](const std::string& family, int rank, const std::vector<int>& weight, int i) {
        const RootDatum datum = datum_of(family, rank);
        return pairing(datum, weight_of(datum, weight), i);
    }, py::arg("family"), py::arg("rank"), py::arg("weight"), py::arg("i"));

    m.def("root_to_weight_coords", [](const std::string& family, int rank, const std::vector<int>& a) {
        const RootDatum datum = datum_of(family, rank);
        Eigen::VectorXi v(rank);
        for (int i = 0; i < rank; ++i)
            v(i) = a.at(i);
        const Weight w = root_to_weight_coords(datum, v);
        return std::vector<int>(w.coords.data(), w.coords.data() + rank);
    }, py::arg("family"), py::arg("rank"), py::arg("root_coords"));

    m.def("apply_simple_reflection", [](const std::string& family, int rank, int i,
                                        const std::vector<int>& weight) {
        const RootDatum datum = datum_of(family, rank);
        const Weight w = apply_simple_reflection(datum, i, weight_of(datum, weight));
        return std::vector<int>(w.coords.data(), w.coords.data() + rank);
    }, py::arg("family"), py::arg("rank"), py::arg("i"), py::arg("weight"));

    m.def("is_reduced", [](const std::string& family, int rank, const std::vector<int>& word) {
        return is_reduced(datum_of(family, rank), Word{word});
    }, py::arg("family"), py::arg("rank"), py::arg("word"));

    m.def("is_reduced_for_longest", [](const std::string& family, int rank, const std::vector<int>& word) {
        return is_reduced_for_longest(datum_of(family, rank), Word{word});
    }, py::arg("family"), py::arg("rank"), py::arg("word"));

    m.def("num_positive_roots", [](const std::string& family, int rank) {
        return num_positive_roots(datum_of(family, rank));
    }, py::arg("family"), py::arg("rank"));

    m.def("weyl_dim", [](const std::string& family, int rank, const std::vector<int>& weight) {
        const RootDatum datum = datum_of(family, rank);
        return big_int(weyl_dim(datum, weight_of(datum, weight)));
    }, py::arg("family"), py::arg("rank"), py::arg("weight"),
       "Dimension of the irreducible representation with this highest weight");

    // Twisted cubes.
    m.def("a_forms", [](const std::string& family, int rank, const std::vector<int>& word,
                        const std::vector<long long>& mult) {
        py::list out;
        for (const auto& f : a_forms(wm_of(family, rank, word, mult))) {
            py::dict d;
            d["index"] = f.index;
            d["constant"] = f.constant;
            d["coeffs"] = f.coeffs;
            out.append(std::move(d));
        }
        return out;
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"));

    m.def("twisted_cube_halfspaces", [](const std::string& family, int rank,
                                        const std::vector<int>& word,
                                        const std::vector<long long>& mult) {
        return json_to_py(json_halfspaces(twisted_cube(wm_of(family, rank, word, mult))));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"));

    m.def("twisted_cube_vertices", [](const std::string& family, int rank,
                                      const std::vector<int>& word,
                                      const std::vector<long long>& mult) {
        return json_to_py(json_vertex_set(vertices(twisted_cube(wm_of(family, rank, word, mult)))));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       "Vertex coordinates as exact fraction strings");

    m.def("twisted_cube_lattice_points", [](const std::string& family, int rank,
                                            const std::vector<int>& word,
                                            const std::vector<long long>& mult,
                                            long long dilate, std::uint64_t cap) {
        return twisted_cube_lattice_points(wm_of(family, rank, word, mult).scaled(dilate), cap);
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       py::arg("dilate") = 1, py::arg("cap") = kDefaultLatticeCap);

    m.def("cartier", [](const std::string& family, int rank, const std::vector<int>& word,
                        const std::vector<long long>& mult) {
        return json_to_py(json_cartier(cartier_data(wm_of(family, rank, word, mult))));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       "Cartier data: sign vector string -> integer vector");

    m.def("check_p", [](const std::string& family, int rank, const std::vector<int>& word,
                        const std::vector<long long>& mult) {
        const auto cert = satisfies_P(wm_of(family, rank, word, mult));
        py::dict d = json_to_py(json_certificate(cert));
        d["holds"] = cert.holds;
        return d;
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       "Condition (P) certificate; witness has the violating k, sigma, point, value");

    m.def("direct_p_oracle", [](const std::string& family, int rank, const std::vector<int>& word,
                                const std::vector<long long>& mult, int denominator,
                                std::uint64_t cap) {
        return direct_P_oracle(wm_of(family, rank, word, mult), denominator, cap);
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       py::arg("denominator") = 2, py::arg("cap") = 10'000'000ull);

    // String polytopes.
    m.def("in_delta", [](const std::string& family, int rank, const std::vector<int>& word,
                         const std::vector<long long>& mult,
                         const std::vector<std::string>& point) {
        const WordMult wm = wm_of(family, rank, word, mult);
        return json_to_py(json_membership(in_delta(wm, point_of(point))));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"), py::arg("point"),
       "Membership in the generalized string polytope; point entries are 'p/q' strings");

    m.def("m_of_lambda", [](const std::string& family, int rank, const std::vector<int>& word,
                            const std::vector<int>& weight) {
        const RootDatum datum = datum_of(family, rank);
        return m_of_lambda(datum, Word{word}, weight_of(datum, weight));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("weight"));

    m.def("delta_lattice_points", [](const std::string& family, int rank,
                                     const std::vector<int>& word,
                                     const std::vector<long long>& mult, long long dilate,
                                     std::uint64_t cap) {
        return delta_lattice_points(wm_of(family, rank, word, mult), dilate, cap);
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       py::arg("dilate") = 1, py::arg("cap") = kDefaultLatticeCap);

    m.def("delta_equals_p", [](const std::string& family, int rank, const std::vector<int>& word,
                               const std::vector<long long>& mult, int max_dilate,
                               std::uint64_t cap) {
        const auto ev = delta_equals_P(wm_of(family, rank, word, mult), max_dilate, cap);
        py::dict d;
        d["equal"] = ev.equal;
        d["vertices_inside"] = ev.vertices_inside;
        d["vertex_witness"] = ev.vertex_witness.empty() ? py::object(py::none())
                                                        : py::object(py::str(ev.vertex_witness));
        py::list counts;
        for (const auto& c : ev.counts) {
            py::dict e;
            e["dilate"] = c.dilate;
            e["cube_points"] = c.cube_points;
            e["delta_points"] = c.delta_points;
            counts.append(std::move(e));
        }
        d["counts"] = std::move(counts);
        return d;
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       py::arg("max_dilate") = 3, py::arg("cap") = kDefaultLatticeCap);

    // Resolution pipeline.
    m.def("construct_m", [](const std::string& family, int rank, const std::vector<int>& word,
                            const std::vector<int>& weight,
                            const std::vector<long long>& offset) {
        const RootDatum datum = datum_of(family, rank);
        return construct_m(datum, Word{word}, weight_of(datum, weight), offset);
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("weight"),
       py::arg("offset") = std::vector<long long>{},
       "Minimal multiplicity list forcing condition (P), entrywise offset optional");

    m.def("verify_resolution", [](const std::string& family, int rank, const std::vector<int>& word,
                                  const std::vector<int>& weight,
                                  const std::vector<long long>& mult, int max_dilate,
                                  std::uint64_t cap) {
        const RootDatum datum = datum_of(family, rank);
        const auto rep = verify_resolution(datum, Word{word}, weight_of(datum, weight),
                                           mult, max_dilate, cap);
        return json_to_py(json_resolution(rep));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("weight"), py::arg("mult"),
       py::arg("max_dilate") = 3, py::arg("cap") = kDefaultLatticeCap);

    m.def("containment_check", [](const std::string& family, int rank, const std::vector<int>& word,
                                  const std::vector<long long>& m_small,
                                  const std::vector<long long>& m_big, int max_dilate,
                                  std::uint64_t cap) {
        const RootDatum datum = datum_of(family, rank);
        return json_to_py(json_containment(
            containment_check(datum, Word{word}, m_small, m_big, max_dilate, cap)));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("m_small"), py::arg("m_big"),
       py::arg("max_dilate") = 3, py::arg("cap") = kDefaultLatticeCap);

    // Generic exact polytope operations.
    using PyHalfspaces = std::vector<std::pair<std::vector<long long>, std::string>>;

    m.def("polytope_vertices", [](int dim, const PyHalfspaces& halfspaces) {
        return json_to_py(json_vertex_set(vertices(polytope_of(dim, halfspaces))));
    }, py::arg("dim"), py::arg("halfspaces"),
       "Vertices of {x : normal.x <= bound} from (normal, bound-string) pairs");

    m.def("polytope_is_lattice", [](int dim, const PyHalfspaces& halfspaces) {
        return is_lattice_polytope(vertices(polytope_of(dim, halfspaces)));
    }, py::arg("dim"), py::arg("halfspaces"));

    m.def("polytope_is_simple", [](int dim, const PyHalfspaces& halfspaces) {
        return is_simple(polytope_of(dim, halfspaces));
    }, py::arg("dim"), py::arg("halfspaces"));

    m.def("polytope_is_smooth", [](int dim, const PyHalfspaces& halfspaces) {
        return is_smooth(polytope_of(dim, halfspaces));
    }, py::arg("dim"), py::arg("halfspaces"));

    m.def("polytope_lattice_points", [](int dim, const PyHalfspaces& halfspaces, std::uint64_t cap) {
        return lattice_points(polytope_of(dim, halfspaces), cap);
    }, py::arg("dim"), py::arg("halfspaces"), py::arg("cap") = kDefaultLatticeCap);

    m.def("polytope_volume", [](int dim, const PyHalfspaces& halfspaces) {
        return to_fraction_string(volume(vertices(polytope_of(dim, halfspaces))));
    }, py::arg("dim"), py::arg("halfspaces"), "Exact volume as a fraction string");

    m.def("export_off", [](const std::string& family, int rank, const std::vector<int>& word,
                           const std::vector<long long>& mult) {
        return to_off(vertices(twisted_cube(wm_of(family, rank, word, mult))));
    }, py::arg("family"), py::arg("rank"), py::arg("word"), py::arg("mult"),
       "OFF mesh of a 3-dimensional twisted cube");

    m.attr("__version__") = "0.1.0";
}
