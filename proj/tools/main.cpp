/**
 * Command line front end. Problem data comes from flags or a JSON spec file
 * (flags win); reports go to stdout as deterministic JSON, text, or OFF.
 * Exit codes: 0 success, 1 a certified check failed, 2 input error,
 * 3 resource cap hit.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stringcubes/serialize.hpp"

using namespace stringcubes;

namespace {

struct RawInput {
    std::string family;
    int rank = 0;
    std::string word, mult, mult2, weight, offset, point;
    int dilates = 3;
    int denominator = 2;
    std::string format = "json";
    std::uint64_t cap = kDefaultLatticeCap;
    bool run_oracle = false;
    std::string spec_path;
};

std::vector<long long> parse_ll_list(const std::string& csv)
{
    std::vector<long long> out;
    if (csv.empty())
        return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoll(item));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv)
{
    std::vector<Rational> out;
    if (csv.empty())
        return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(rational_from_string(item));
    return out;
}

struct Problem {
    char family = 0;
    int rank = 0;
    std::vector<int> word;
    std::optional<std::vector<long long>> mult, mult2, weight, offset;
    std::optional<std::vector<Rational>> point;
    int dilates = 3;
    int denominator = 2;
    std::string format = "json";
    std::uint64_t cap = kDefaultLatticeCap;
    bool run_oracle = false;
};

// Merge the spec file (when given) under the flags that were actually set.
Problem resolve_input(const CLI::App* cmd, const RawInput& raw)
{
    Json spec = Json::object();
    if (!raw.spec_path.empty()) {
        std::ifstream in(raw.spec_path);
        if (!in)
            throw std::invalid_argument("cannot open spec file " + raw.spec_path);
        in >> spec;
    }
    auto flag_set = [&](const std::string& name) { return cmd->count(name) > 0; };

    Problem p;
    if (flag_set("--family"))
        p.family = raw.family.empty() ? 0 : raw.family[0];
    else if (spec.contains("family"))
        p.family = spec["family"].get<std::string>().at(0);
    else
        throw std::invalid_argument("missing family");

    if (flag_set("--rank"))
        p.rank = raw.rank;
    else if (spec.contains("rank"))
        p.rank = spec["rank"].get<int>();
    else
        throw std::invalid_argument("missing rank");

    if (flag_set("--word"))
        for (long long v : parse_ll_list(raw.word))
            p.word.push_back(static_cast<int>(v));
    else if (spec.contains("word"))
        p.word = spec["word"].get<std::vector<int>>();
    else
        throw std::invalid_argument("missing word");

    auto take_list = [&](const char* flag, const char* key, const std::string& rawval)
        -> std::optional<std::vector<long long>> {
        if (flag_set(flag))
            return parse_ll_list(rawval);
        if (spec.contains(key))
            return spec[key].get<std::vector<long long>>();
        return std::nullopt;
    };
    p.mult = take_list("--mult", "mult", raw.mult);
    p.mult2 = take_list("--mult2", "mult2", raw.mult2);
    p.weight = take_list("--weight", "weight", raw.weight);
    p.offset = take_list("--offset", "offset", raw.offset);

    if (flag_set("--point"))
        p.point = parse_rational_list(raw.point);
    else if (spec.contains("point")) {
        std::vector<Rational> pt;
        for (const auto& s : spec["point"])
            pt.push_back(rational_from_string(s.get<std::string>()));
        p.point = std::move(pt);
    }

    p.dilates = flag_set("--dilates") ? raw.dilates
                : spec.contains("dilates") ? spec["dilates"].get<int>() : 3;
    p.denominator = flag_set("--denominator") ? raw.denominator
                    : spec.contains("denominator") ? spec["denominator"].get<int>() : 2;
    p.format = flag_set("--format") ? raw.format
               : spec.contains("format") ? spec["format"].get<std::string>() : "json";
    p.cap = flag_set("--cap") ? raw.cap
            : spec.contains("cap") ? spec["cap"].get<std::uint64_t>() : kDefaultLatticeCap;
    p.run_oracle = flag_set("--oracle") ? raw.run_oracle
                   : spec.contains("oracle") ? spec["oracle"].get<bool>() : false;
    if (p.format != "json" && p.format != "text" && p.format != "off")
        throw std::invalid_argument("format must be json, text, or off");
    if (p.dilates < 1 || p.denominator < 1)
        throw std::invalid_argument("dilates and denominator must be positive");
    return p;
}

RootDatum datum_of(const Problem& p)
{
    return RootDatum::create(family_from_char(p.family), p.rank);
}

Word word_of(const Problem& p)
{
    return Word{p.word};
}

Weight weight_of(const Problem& p, const RootDatum& datum)
{
    if (!p.weight)
        throw std::invalid_argument("this command needs --weight");
    if (static_cast<int>(p.weight->size()) != datum.rank)
        throw std::invalid_argument("weight length does not match rank");
    Eigen::VectorXi coords(datum.rank);
    for (int i = 0; i < datum.rank; ++i)
        coords(i) = static_cast<int>((*p.weight)[i]);
    return Weight{coords};
}

// Multiplicities straight from --mult, or derived through m(lambda).
std::vector<long long> mult_of(const Problem& p, const RootDatum& datum, const Word& word)
{
    if (p.mult && p.weight)
        throw std::invalid_argument("give either --mult or --weight, not both");
    if (p.mult)
        return *p.mult;
    if (p.weight)
        return m_of_lambda(datum, word, weight_of(p, datum));
    throw std::invalid_argument("this command needs --mult or --weight");
}

Json input_echo(const Problem& p)
{
    Json in;
    in["family"] = std::string(1, p.family);
    in["rank"] = p.rank;
    in["word"] = p.word;
    if (p.mult)
        in["mult"] = *p.mult;
    if (p.mult2)
        in["mult2"] = *p.mult2;
    if (p.weight)
        in["weight"] = *p.weight;
    if (p.offset)
        in["offset"] = *p.offset;
    if (p.point) {
        Json pt = Json::array();
        for (const auto& q : *p.point)
            pt.push_back(to_fraction_string(q));
        in["point"] = std::move(pt);
    }
    in["dilates"] = p.dilates;
    in["denominator"] = p.denominator;
    in["format"] = p.format;
    return in;
}

void print_text_checks(std::ostream& os, const Json& checks)
{
    for (const auto& [name, check] : checks.items()) {
        os << "  " << name << ": " << (check["pass"].get<bool>() ? "pass" : "FAIL");
        if (!check["witness"].is_null()) {
            if (check["witness"].is_string())
                os << "  [" << check["witness"].get<std::string>() << "]";
            else
                os << "  [" << check["witness"].dump() << "]";
        }
        os << "\n";
    }
}

void emit(const Problem& p, const std::string& command, const Json& report)
{
    if (p.format == "text") {
        std::cout << command << "\n";
        if (report.contains("m"))
            std::cout << "  m: " << report["m"].dump() << "\n";
        if (report.contains("m_lambda"))
            std::cout << "  m(lambda): " << report["m_lambda"].dump() << "\n";
        if (report.contains("checks"))
            print_text_checks(std::cout, report["checks"]);
        if (report.contains("vertices"))
            std::cout << "  vertices: " << report["vertices"].dump() << "\n";
        if (report.contains("lattice_counts"))
            std::cout << "  lattice counts: " << report["lattice_counts"].dump() << "\n";
        if (report.contains("membership"))
            std::cout << "  membership: " << report["membership"].dump() << "\n";
        if (report.contains("cartier"))
            std::cout << "  cartier: " << report["cartier"].dump() << "\n";
        if (report.contains("containment"))
            std::cout << "  containment: " << report["containment"].dump() << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

int cmd_twisted_cube(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const WordMult wm(datum, word, mult_of(p, datum, word));
    const HPolytope P = twisted_cube(wm);
    const VertexSet V = vertices(P);

    Json checks;
    {
        CheckResult lattice{is_lattice_polytope(V), ""};
        checks["lattice"] = json_check(lattice);
        CheckResult simple, smooth;
        try {
            simple.pass = is_simple(P);
        } catch (const std::domain_error& e) {
            simple.pass = false;
            simple.witness = e.what();
        }
        try {
            smooth.pass = is_smooth(P);
        } catch (const std::domain_error& e) {
            smooth.pass = false;
            smooth.witness = e.what();
        }
        checks["simple"] = json_check(simple);
        checks["smooth"] = json_check(smooth);
    }

    Json counts = Json::object();
    for (int k = 1; k <= p.dilates; ++k)
        counts[std::to_string(k)] = twisted_cube_lattice_points(wm.scaled(k), p.cap).size();

    Json report;
    report["command"] = "twisted-cube";
    report["input"] = input_echo(p);
    report["m"] = wm.mult;
    report["checks"] = std::move(checks);
    report["halfspaces"] = json_halfspaces(P);
    report["vertices"] = json_vertex_set(V);
    report["lattice_counts"] = std::move(counts);
    emit(p, "twisted-cube", report);
    return 0;
}

int cmd_string_polytope(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const WordMult wm(datum, word, mult_of(p, datum, word));

    Json counts = Json::object();
    for (int k = 1; k <= p.dilates; ++k)
        counts[std::to_string(k)] = delta_lattice_points(wm, k, p.cap).size();
    Json pts = Json::array();
    for (const auto& q : delta_lattice_points(wm, 1, p.cap))
        pts.push_back(q);

    Json report;
    report["command"] = "string-polytope";
    report["input"] = input_echo(p);
    report["m"] = wm.mult;
    if (p.point) {
        if (static_cast<int>(p.point->size()) != wm.size())
            throw std::invalid_argument("point length does not match word length");
        VectorXr x(wm.size());
        for (int i = 0; i < wm.size(); ++i)
            x(i) = (*p.point)[i];
        report["membership"] = json_membership(in_delta(wm, x));
    }
    report["lattice_counts"] = std::move(counts);
    report["points"] = std::move(pts);
    emit(p, "string-polytope", report);
    return 0;
}

int cmd_check_p(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const WordMult wm(datum, word, mult_of(p, datum, word));
    const ConditionPCertificate cert = satisfies_P(wm);

    Json checks;
    checks["conditionP"] = json_certificate(cert);
    if (p.run_oracle) {
        // Independent quantifier scan on the (1/denominator)-grid.
        const bool oracle = direct_P_oracle(wm, p.denominator, p.cap);
        CheckResult agrees{oracle == cert.holds, ""};
        if (!agrees.pass)
            agrees.witness = "criterion says " + std::string(cert.holds ? "true" : "false") +
                             ", direct scan says " + (oracle ? "true" : "false");
        checks["oracle_agrees"] = json_check(agrees);
    }
    Json report;
    report["command"] = "check-p";
    report["input"] = input_echo(p);
    report["m"] = wm.mult;
    report["checks"] = std::move(checks);
    emit(p, "check-p", report);
    if (!cert.holds)
        std::cerr << "check-failure: condition (P) fails: " << cert.witness_text() << "\n";
    bool ok = cert.holds;
    if (p.run_oracle && report["checks"].contains("oracle_agrees"))
        ok = ok && report["checks"]["oracle_agrees"]["pass"].get<bool>();
    return ok ? 0 : 1;
}

int cmd_cartier(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const WordMult wm(datum, word, mult_of(p, datum, word));
    Json report;
    report["command"] = "cartier";
    report["input"] = input_echo(p);
    report["m"] = wm.mult;
    report["cartier"] = json_cartier(cartier_data(wm));
    emit(p, "cartier", report);
    return 0;
}

int cmd_m_of_lambda(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const auto m = m_of_lambda(datum, word, weight_of(p, datum));
    Json report;
    report["command"] = "m-of-lambda";
    report["input"] = input_echo(p);
    report["m"] = m;
    emit(p, "m-of-lambda", report);
    return 0;
}

int cmd_resolve(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const Weight lambda = weight_of(p, datum);
    const std::vector<long long> m =
        p.mult ? *p.mult
               : construct_m(datum, word, lambda,
                             p.offset ? *p.offset : std::vector<long long>{});
    const ResolutionReport rep = verify_resolution(datum, word, lambda, m, p.dilates, p.cap);
    const WordMult wm(datum, word, m);

    Json report;
    report["command"] = "resolve";
    report["input"] = input_echo(p);
    const Json res = json_resolution(rep);
    report["m"] = res["m"];
    report["m_lambda"] = res["m_lambda"];
    report["checks"] = res["checks"];
    report["containment_dilates"] = res["containment_dilates"];
    report["vertices"] = json_vertex_set(vertices(twisted_cube(wm)));
    Json counts = Json::object();
    for (int k = 1; k <= p.dilates; ++k)
        counts[std::to_string(k)] = delta_lattice_points(wm, k, p.cap).size();
    report["lattice_counts"] = std::move(counts);
    report["all_pass"] = rep.all_pass();
    emit(p, "resolve", report);
    if (!rep.all_pass())
        std::cerr << "check-failure: resolution report has failing checks\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_compare(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    std::vector<long long> small, big;
    if (p.mult && p.mult2) {
        small = *p.mult;
        big = *p.mult2;
    } else if (p.weight && p.mult) {
        small = m_of_lambda(datum, word, weight_of(p, datum));
        big = *p.mult;
    } else {
        throw std::invalid_argument(
            "compare needs --mult and --mult2, or --weight (small side m(lambda)) and --mult");
    }
    const ContainmentReport rep = containment_check(datum, word, small, big, p.dilates, p.cap);

    Json report;
    report["command"] = "compare";
    report["input"] = input_echo(p);
    report["m_small"] = small;
    report["m_big"] = big;
    report["containment"] = json_containment(rep);
    emit(p, "compare", report);
    if (!rep.all_contained())
        std::cerr << "check-failure: containment fails\n";
    return rep.all_contained() ? 0 : 1;
}

int cmd_export(const Problem& p)
{
    const RootDatum datum = datum_of(p);
    const Word word = word_of(p);
    const WordMult wm(datum, word, mult_of(p, datum, word));
    const VertexSet V = vertices(twisted_cube(wm));
    if (p.format == "off") {
        std::cout << to_off(V);
        return 0;
    }
    Json report;
    report["command"] = "export";
    report["input"] = input_echo(p);
    report["m"] = wm.mult;
    report["vertices"] = json_vertex_set(V);
    emit(p, "export", report);
    return 0;
}

void add_common(CLI::App* cmd, RawInput& raw)
{
    cmd->add_option("--family", raw.family, "Root system family, one of A..G");
    cmd->add_option("--rank", raw.rank, "Rank of the root system");
    cmd->add_option("--word", raw.word, "Word letters, comma separated (may be empty)");
    cmd->add_option("--mult", raw.mult, "Multiplicity list, comma separated");
    cmd->add_option("--mult2", raw.mult2, "Second multiplicity list (compare: the big side)");
    cmd->add_option("--weight", raw.weight, "Dominant weight in fundamental coordinates");
    cmd->add_option("--offset", raw.offset, "Non-negative offset added to the constructed m (resolve)");
    cmd->add_option("--point", raw.point, "Query point, comma separated rationals like 0,0,1/2");
    cmd->add_option("--dilates", raw.dilates, "Largest dilate for lattice counts (default 3)");
    cmd->add_option("--denominator", raw.denominator, "Grid denominator for the direct (P) oracle (default 2)");
    cmd->add_option("--format", raw.format, "Output format: json (default), text, or off (export)");
    cmd->add_option("--cap", raw.cap, "Candidate cap for lattice enumerations");
    cmd->add_flag("--oracle", raw.run_oracle,
                  "check-p: also run the direct grid scan and report agreement");
    cmd->add_option("--spec", raw.spec_path, "JSON spec file; explicit flags override its fields");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "stringcubes: exact polytopes attached to words in root systems.\n"
        "Twisted cubes and their Cartier data, generalized string polytopes,\n"
        "condition (P) certificates, and smooth resolution multiplicity lists.\n"
        "Node numbering is Bourbaki; G2 is taken with alpha_1 long, so its\n"
        "Cartan matrix is [[2,-1],[-3,2]]."};
    app.require_subcommand(1);

    RawInput raw;
    int exit_code = 0;
    struct Cmd {
        const char* name;
        const char* desc;
        int (*fn)(const Problem&);
    };
    const std::vector<Cmd> cmds = {
        {"twisted-cube", "H-description, vertices, lattice/simple/smooth verdicts", cmd_twisted_cube},
        {"string-polytope", "Membership queries and lattice points per dilate", cmd_string_polytope},
        {"check-p", "Condition (P) certificate with witness", cmd_check_p},
        {"cartier", "Full Cartier data table", cmd_cartier},
        {"m-of-lambda", "Multiplicity list m(lambda) from a dominant weight", cmd_m_of_lambda},
        {"resolve", "Construct m and run the full resolution report", cmd_resolve},
        {"compare", "Lattice-level containment of one string polytope in another", cmd_compare},
        {"export", "Vertex export, OFF in dimension 3 or JSON", cmd_export},
    };
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.desc);
        add_common(sub, raw);
        sub->callback([&raw, &exit_code, sub, fn = c.fn]() {
            const Problem p = resolve_input(sub, raw);
            exit_code = fn(p);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: resource-cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
