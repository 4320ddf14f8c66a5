#include "bowlab/combinatorics.hpp"
#include "bowlab/cores.hpp"
#include "bowlab/errors.hpp"
#include "bowlab/hilbert.hpp"
#include "bowlab/json_io.hpp"
#include "bowlab/laurent.hpp"
#include "bowlab/mvy.hpp"
#include "bowlab/normalizer.hpp"
#include "bowlab/rng.hpp"
#include "bowlab/shapes.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bowlab::Json;

// Flag-level problems that should surface as usage errors (exit 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    if (text.empty()) throw UsageError(std::string(flag) + " must not be empty");
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(flag) + " must not be empty");
    return out;
}

Json load_payload(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open input file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return Json::parse(text); // json::exception maps to exit 2
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

bowlab::Mu mu_from_flag_or_payload(const std::optional<std::string>& mu_flag,
                                   const Json* payload, const char* ctx) {
    std::optional<bowlab::Mu> from_flag;
    if (mu_flag) {
        from_flag = bowlab::Mu(parse_int_list(*mu_flag, "--mu"));
    }
    std::optional<bowlab::Mu> from_doc;
    if (payload && payload->is_object() && payload->contains("mu")) {
        from_doc = bowlab::mu_from_json((*payload)["mu"]);
    }
    if (from_flag && from_doc && from_flag->parts() != from_doc->parts()) {
        throw UsageError("--mu disagrees with the payload's \"mu\"");
    }
    if (from_doc) return *from_doc;
    if (from_flag) return *from_flag;
    throw UsageError(std::string(ctx) + " needs --mu or a payload with \"mu\"");
}

int cmd_feasible(const std::string& rows, const std::string& cols) {
    auto r = parse_int_list(rows, "--rows");
    auto c = parse_int_list(cols, "--cols");
    bowlab::FeasibilityReport rep = bowlab::pointful_check(r, c);
    Json out;
    out["feasible"] = rep.feasible;
    if (!rep.feasible) out["reason"] = rep.reason;
    emit(out);
    return rep.feasible ? 0 : 1;
}

int cmd_fixed_points(const std::string& rows, const std::string& cols,
                     bool with_list, bool stream) {
    auto r = parse_int_list(rows, "--rows");
    auto c = parse_int_list(cols, "--cols");
    auto grids = bowlab::enumerate_fixed_points(r, c, /*allow_large=*/stream);
    if (stream) {
        for (const auto& g : grids) {
            Json m = Json::array();
            for (const auto& row : g) m.push_back(row);
            emit(m);
        }
        Json tail;
        tail["count"] = grids.size();
        emit(tail);
        return 0;
    }
    Json out;
    out["count"] = grids.size();
    if (with_list) {
        Json list = Json::array();
        for (const auto& g : grids) {
            Json m = Json::array();
            for (const auto& row : g) m.push_back(row);
            list.push_back(std::move(m));
        }
        out["matrices"] = std::move(list);
    }
    emit(out);
    return 0;
}

int cmd_normalize(const std::optional<std::string>& mu_flag,
                  const std::optional<std::string>& input,
                  const std::optional<std::uint64_t>& seed) {
    Json payload;
    bowlab::Mu mu;
    bowlab::RatMat k;
    if (input) {
        payload = load_payload(*input);
        mu = mu_from_flag_or_payload(mu_flag, &payload, "normalize");
        if (payload.is_object() && payload.contains("K")) {
            k = bowlab::rat_mat_from_json(payload["K"]);
        } else if (payload.is_array()) {
            k = bowlab::rat_mat_from_json(payload);
        } else {
            throw bowlab::JsonSchemaError("normalize payload needs a \"K\" matrix");
        }
    } else {
        if (!seed) throw UsageError("normalize needs --input, or --mu with --seed");
        mu = mu_from_flag_or_payload(mu_flag, nullptr, "normalize");
        k = bowlab::sample_level(mu, *seed);
    }
    bowlab::NormalizationResult res = bowlab::normalize_level(mu, k);
    Json out;
    out["K"] = bowlab::rat_mat_to_json(k);
    out["mu"] = bowlab::mu_to_json(mu);
    out["s"] = bowlab::rat_mat_to_json(res.s);
    out["u"] = bowlab::rat_mat_to_json(res.u);
    emit(out);
    return 0;
}

int cmd_mvy(const std::optional<std::string>& mu_flag,
            const std::optional<std::string>& input,
            const std::optional<std::uint64_t>& seed) {
    bowlab::Mu mu;
    bowlab::PolyMat a;
    if (input) {
        Json payload = load_payload(*input);
        mu = mu_from_flag_or_payload(mu_flag, &payload, "mvy");
        if (payload.is_object() && payload.contains("A")) {
            a = bowlab::poly_mat_from_json(payload["A"]);
        } else if (payload.is_array()) {
            a = bowlab::poly_mat_from_json(payload);
        } else {
            throw bowlab::JsonSchemaError("mvy payload needs an \"A\" matrix");
        }
    } else {
        if (!seed) throw UsageError("mvy needs --input, or --mu with --seed");
        mu = mu_from_flag_or_payload(mu_flag, nullptr, "mvy");
        bowlab::Rng rng(*seed);
        a = bowlab::mvy_inverse(bowlab::sample_slice_matrix(mu, rng), mu);
    }
    bowlab::ForwardResult fw = bowlab::mvy_forward(a, mu);
    bool jordan_ok = bowlab::verify_jordan_type(a, fw.b);
    Json out;
    out["A"] = bowlab::poly_mat_to_json(a);
    out["B"] = bowlab::rat_mat_to_json(fw.b);
    out["c_consistent"] = fw.high_coefficients_consistent;
    out["jordan_ok"] = jordan_ok;
    out["mu"] = bowlab::mu_to_json(mu);
    emit(out);
    return (jordan_ok && fw.high_coefficients_consistent) ? 0 : 1;
}

int cmd_mvy_inv(const std::optional<std::string>& mu_flag,
                const std::optional<std::string>& input,
                const std::optional<std::uint64_t>& seed) {
    bowlab::Mu mu;
    bowlab::RatMat b;
    if (input) {
        Json payload = load_payload(*input);
        mu = mu_from_flag_or_payload(mu_flag, &payload, "mvy-inv");
        if (payload.is_object() && payload.contains("B")) {
            b = bowlab::rat_mat_from_json(payload["B"]);
        } else if (payload.is_array()) {
            b = bowlab::rat_mat_from_json(payload);
        } else {
            throw bowlab::JsonSchemaError("mvy-inv payload needs a \"B\" matrix");
        }
    } else {
        if (!seed) throw UsageError("mvy-inv needs --input, or --mu with --seed");
        mu = mu_from_flag_or_payload(mu_flag, nullptr, "mvy-inv");
        bowlab::Rng rng(*seed);
        b = bowlab::sample_slice_matrix(mu, rng);
    }
    bowlab::PolyMat a = bowlab::mvy_inverse(b, mu);
    if (bowlab::mvy_forward(a, mu).b != b) {
        throw bowlab::VerificationError("inverse did not round-trip");
    }
    Json out;
    out["A"] = bowlab::poly_mat_to_json(a);
    out["B"] = bowlab::rat_mat_to_json(b);
    out["mu"] = bowlab::mu_to_json(mu);
    emit(out);
    return 0;
}

int cmd_jordan_check(const std::optional<std::string>& input) {
    if (!input) throw UsageError("jordan-check needs --input");
    Json payload = load_payload(*input);
    if (!payload.is_object() || !payload.contains("A") || !payload.contains("B")) {
        throw bowlab::JsonSchemaError("jordan-check payload needs \"A\" and \"B\"");
    }
    bowlab::PolyMat a = bowlab::poly_mat_from_json(payload["A"]);
    bowlab::RatMat b = bowlab::rat_mat_from_json(payload["B"]);
    bool ok = bowlab::verify_jordan_type(a, b);
    Json out;
    out["jordan_ok"] = ok;
    emit(out);
    return ok ? 0 : 1;
}

Json emit_tree(const bowlab::TwoRowSignature& sig, int depth_left,
               long long& visited, long long budget) {
    if (++visited > budget) {
        throw bowlab::ValidationError("recursion exceeded the node budget of " +
                                      std::to_string(budget));
    }
    Json node;
    Json c = Json::array();
    for (int ci : sig.c) c.push_back(ci);
    node["c"] = std::move(c);
    bowlab::CoreData d = bowlab::core_data(sig);
    node["rank"] = d.rank;
    if (d.rank == 0) {
        bowlab::BaseCase bc = bowlab::base_case_descriptor(sig);
        Json gr;
        gr["ambient"] = bc.amb;
        gr["subspace"] = bc.sub;
        node["grassmannian"] = std::move(gr);
        node["poincare"] = bowlab::gaussian_binomial(bc.amb, bc.sub).str();
        return node;
    }
    if (depth_left == 0) {
        node["truncated"] = true;
        return node;
    }
    node["u_child"] = emit_tree(bowlab::u_step(sig), depth_left - 1, visited, budget);
    node["v_child"] = emit_tree(bowlab::v_step(sig), depth_left - 1, visited, budget);
    return node;
}

int cmd_core(int k, const std::string& c_text, bool with_tree,
             const std::optional<int>& depth) {
    bowlab::TwoRowSignature sig;
    sig.k = k;
    sig.c = parse_int_list(c_text, "--c");
    Json out;
    out["c"] = sig.c;
    out["k"] = sig.k;
    bool valid = bowlab::signature_valid(sig);
    out["valid"] = valid;
    if (!valid) {
        emit(out);
        return 1;
    }
    bowlab::CoreData d = bowlab::core_data(sig);
    Json data;
    data["a"] = d.a;
    data["b"] = d.b;
    data["r"] = d.r;
    out["data"] = std::move(data);
    out["rank"] = d.rank;
    out["u"] = sig.u();
    out["nil"] = bowlab::rat_mat_to_json(bowlab::nil_matrix(sig));
    bowlab::ChartDescription chart = bowlab::chart_description(sig);
    Json weights;
    weights["m"] = chart.m_weights;
    weights["tail"] = chart.tail_weights;
    out["weights"] = std::move(weights);
    if (d.rank == 0) {
        bowlab::BaseCase bc = bowlab::base_case_descriptor(sig);
        Json gr;
        gr["ambient"] = bc.amb;
        gr["subspace"] = bc.sub;
        out["grassmannian"] = std::move(gr);
        out["poincare"] = bowlab::gaussian_binomial(bc.amb, bc.sub).str();
    }
    if (with_tree) {
        long long budget = 10000;
        if (const char* env = std::getenv("BOWLAB_NODE_BUDGET")) {
            char* end = nullptr;
            long long parsed = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) budget = parsed;
        }
        long long visited = 0;
        out["tree"] = emit_tree(sig, depth.value_or(-1) < 0 ? -1 : *depth,
                                visited, budget);
        bowlab::TreeStats stats = bowlab::recursion_tree(sig);
        Json sj;
        sj["leaves"] = stats.leaves;
        sj["max_depth"] = stats.max_depth;
        sj["nodes"] = stats.nodes;
        out["tree_stats"] = std::move(sj);
    }
    emit(out);
    return 0;
}

int cmd_hilbert(const std::string& pres_path, int degree) {
    Json doc = load_payload(pres_path);
    bowlab::Presentation pres = bowlab::presentation_from_json(doc);
    Json out;
    out["dimension"] = bowlab::graded_dimension(pres, degree);
    emit(out);
    return 0;
}

struct SelfTest {
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> failed;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (failed.size() < 20) failed.push_back(what);
        }
    }
};

int cmd_selftest(std::uint64_t seed) {
    SelfTest st;
    using namespace bowlab;

    for (const std::vector<int>& parts :
         {std::vector<int>{2, 4}, std::vector<int>{1, 1, 1}, std::vector<int>{3, 2}}) {
        Mu mu(parts);
        for (int t = 0; t < 5; ++t) {
            LevelSample ls = sample_level_witnessed(mu, seed + 100 * t + mu.total());
            try {
                NormalizationResult res = normalize_level(mu, ls.k);
                st.expect(res.s == ls.s, "normalize recovers the slice part");
                st.expect(res.u == rat_inverse(ls.w), "normalize recovers the witness");
                st.expect(res.corner_preserved, "corner blocks preserved");
            } catch (const std::exception& e) {
                st.expect(false, std::string("normalize threw: ") + e.what());
            }
        }
    }

    for (const std::vector<int>& parts :
         {std::vector<int>{1, 1}, std::vector<int>{2, 2}, std::vector<int>{1, 2}}) {
        Mu mu(parts);
        for (int t = 0; t < 5; ++t) {
            Rng rng(seed + 7 * t + static_cast<std::uint64_t>(mu.total()));
            RatMat b = sample_slice_matrix(mu, rng);
            try {
                PolyMat a = mvy_inverse(b, mu);
                ForwardResult fw = mvy_forward(a, mu);
                st.expect(fw.b == b, "slice round trip");
                st.expect(fw.high_coefficients_consistent, "high coefficients");
                st.expect(verify_jordan_type(a, b), "diagonal factors match");
                st.expect(w_membership(a, mu).ok, "minor membership");
                st.expect(quotient_basis_check(a, fw.table).ok, "syzygy certificate");
            } catch (const std::exception& e) {
                st.expect(false, std::string("mvy threw: ") + e.what());
            }
        }
    }

    {
        auto rep = pointful_check({1, 1}, {1, 1});
        st.expect(rep.feasible, "permutation margins feasible");
        st.expect(enumerate_fixed_points({1, 1}, {1, 1}).size() == 2,
                  "2 fixed points for 2x2 permutation margins");
        st.expect(enumerate_fixed_points({1, 1, 1}, {1, 1, 1}).size() == 6,
                  "6 fixed points for 3x3 permutation margins");
        st.expect(!pointful_check({2, 2}, {1, 1, 1}).feasible &&
                      !pointful_check({2, 2}, {4}).feasible &&
                      !pointful_check({4, 4, 3, 1}, {4, 4, 3, 1}).feasible,
                  "infeasible margins rejected");
    }

    {
        TwoRowSignature sig{2, {2, 2, 0, 0}};
        st.expect(core_data(sig).rank == 4, "rank of the worked signature");
        st.expect(core_data(u_step(sig)).rank == 1, "rank after u surgery");
        st.expect(core_data(v_step(sig)).rank == 3, "rank after v surgery");
        TreeStats stats = recursion_tree(sig);
        st.expect(stats.nodes > 0 && stats.leaves > 0, "recursion tree ran");
    }

    {
        Presentation pres;
        pres.variables = {"x1", "x2", "x3", "v"};
        MultiPoly g1;
        g1.terms.push_back({{0, 0, 0, 2}, rat(1)});
        g1.terms.push_back({{1, 0, 0, 1}, rat(-1)});
        g1.terms.push_back({{0, 1, 0, 1}, rat(-1)});
        g1.terms.push_back({{1, 1, 0, 0}, rat(1)});
        MultiPoly g2;
        g2.terms.push_back({{0, 0, 1, 1}, rat(1)});
        pres.relations = {g1, g2};
        st.expect(graded_dimension(pres, 2) == 4, "graded dimension in degree 2");
    }

    {
        Rng rng(seed + 99);
        for (int t = 0; t < 20; ++t) {
            Polynomial p(std::vector<Rational>{rng.rational(), rng.rational(),
                                               rng.nonzero_rational()});
            Polynomial q(std::vector<Rational>{rng.rational(), rng.nonzero_rational()});
            long depth = -4;
            TruncatedLaurent r = laurent_div(p, q, depth);
            TruncatedLaurent res = TruncatedLaurent::from_poly(p) -
                                   TruncatedLaurent::from_poly(q) * r;
            st.expect(res.vanishes_above(depth + q.degree() - 1),
                      "division residual bound");
        }
    }

    Json out;
    out["checks"] = st.checks;
    out["failures"] = st.failures;
    if (!st.failed.empty()) out["failed"] = st.failed;
    out["seed"] = seed;
    emit(out);
    return st.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix models: slice normalization, polynomial-matrix "
                 "transversals, fixed-point combinatorics, graded dimensions"};
    app.require_subcommand(1);

    std::optional<std::string> mu_flag;
    std::optional<std::string> input;
    std::optional<std::uint64_t> seed;
    std::string rows, cols, c_text, pres_path;
    int k = 0, degree = 0;
    std::optional<int> depth;
    bool with_json = false, stream = false, with_tree = false;

    CLI::App* feasible = app.add_subcommand("feasible", "margin feasibility");
    feasible->add_option("--rows", rows, "row sums, comma separated")->required();
    feasible->add_option("--cols", cols, "column sums, comma separated")->required();

    CLI::App* fixed = app.add_subcommand("fixed-points", "enumerate 0/1 matrices");
    fixed->add_option("--rows", rows, "row sums, comma separated")->required();
    fixed->add_option("--cols", cols, "column sums, comma separated")->required();
    fixed->add_flag("--json", with_json, "include the matrix list");
    fixed->add_flag("--stream", stream, "one JSON document per line");

    CLI::App* normalize = app.add_subcommand("normalize", "conjugate into the slice");
    normalize->add_option("--mu", mu_flag, "block sizes, comma separated");
    normalize->add_option("--input", input, "JSON payload file, or - for stdin");
    normalize->add_option("--seed", seed, "sample a random instance");

    CLI::App* mvy = app.add_subcommand("mvy", "polynomial matrix to slice matrix");
    mvy->add_option("--mu", mu_flag, "block sizes, comma separated");
    mvy->add_option("--input", input, "JSON payload file, or - for stdin");
    mvy->add_option("--seed", seed, "sample a random instance");

    CLI::App* mvy_inv = app.add_subcommand("mvy-inv", "slice matrix to polynomial matrix");
    mvy_inv->add_option("--mu", mu_flag, "block sizes, comma separated");
    mvy_inv->add_option("--input", input, "JSON payload file, or - for stdin");
    mvy_inv->add_option("--seed", seed, "sample a random instance");

    CLI::App* jordan = app.add_subcommand("jordan-check", "compare diagonal factors");
    jordan->add_option("--input", input, "JSON payload file, or - for stdin");

    CLI::App* core = app.add_subcommand("core", "two-row signature calculus");
    core->add_option("--k", k, "row budget")->required();
    core->add_option("--c", c_text, "increments, comma separated")->required();
    core->add_flag("--tree", with_tree, "emit the recursion tree");
    core->add_option("--depth", depth, "cap the emitted tree depth");

    CLI::App* hilbert = app.add_subcommand("hilbert", "graded quotient dimension");
    hilbert->add_option("--pres", pres_path, "presentation JSON file")->required();
    hilbert->add_option("--degree", degree, "cohomological degree")->required();

    std::uint64_t selftest_seed = 12345;
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in checks");
    selftest->add_option("--seed", selftest_seed, "seed for the sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cerr << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cerr << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (feasible->parsed()) return cmd_feasible(rows, cols);
        if (fixed->parsed()) return cmd_fixed_points(rows, cols, with_json, stream);
        if (normalize->parsed()) return cmd_normalize(mu_flag, input, seed);
        if (mvy->parsed()) return cmd_mvy(mu_flag, input, seed);
        if (mvy_inv->parsed()) return cmd_mvy_inv(mu_flag, input, seed);
        if (jordan->parsed()) return cmd_jordan_check(input);
        if (core->parsed()) return cmd_core(k, c_text, with_tree, depth);
        if (hilbert->parsed()) return cmd_hilbert(pres_path, degree);
        if (selftest->parsed()) return cmd_selftest(selftest_seed);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bowlab::JsonSchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const bowlab::VerificationError& e) {
        Json out;
        out["error"] = e.what();
        emit(out);
        return 1;
    } catch (const std::runtime_error& e) {
        // precision, singularity, and domain validation failures
        Json out;
        out["error"] = e.what();
        emit(out);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
