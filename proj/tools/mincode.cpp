#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mincode/bounds.hpp"
#include "mincode/certificate.hpp"
#include "mincode/geometry.hpp"
#include "mincode/matrix_io.hpp"
#include "mincode/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNegative = 3; // exhausted search / non-minimal code / failed certificate

/// Resolves the output stream: stdout when no path is given, otherwise a
/// file, optionally relative to $MINCODE_OUT_DIR.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        std::string full = path;
        const char* dir = std::getenv("MINCODE_OUT_DIR");
        if (dir && *dir && path.front() != '/') full = std::string(dir) + "/" + path;
        file_ = std::make_unique<std::ofstream>(full);
        if (!*file_) throw mincode::ParseError("cannot open output file: " + full);
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string fixed6(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

int run_table(const std::vector<int>& q_list, const std::string& format, const std::string& out_path) {
    for (int q : q_list) {
        if (!mincode::is_prime_power(q)) {
            std::cerr << "error: " << q << " is not a prime power\n";
            return kExitInvalidInput;
        }
    }
    const std::vector<mincode::GapRow> rows = mincode::bound_gap_table(q_list);
    Output out(out_path);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"q", r.q},
                         {"liminf_ratio", r.liminf_ratio},
                         {"liminf_minus_q", r.gap},
                         {"epsilon_proof", r.epsilon}});
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "q,liminf_ratio,liminf_minus_q,epsilon_proof\n";
        for (const auto& r : rows)
            out.stream() << r.q << ',' << fixed6(r.liminf_ratio) << ',' << fixed6(r.gap) << ','
                         << fixed6(r.epsilon) << '\n';
    }
    return kExitOk;
}

int run_epsilon(int q, const std::string& format, const std::string& out_path) {
    if (!mincode::is_prime_power(q)) {
        std::cerr << "error: " << q << " is not a prime power\n";
        return kExitInvalidInput;
    }
    const mincode::EpsilonSolution sol = mincode::epsilon_proof(q);
    Output out(out_path);
    if (format == "json") {
        nlohmann::json j = {{"q", sol.q},          {"epsilon", sol.epsilon}, {"delta_c", sol.delta_c},
                            {"A", sol.A},          {"C", sol.C},             {"liminf_ratio", sol.liminf_ratio}};
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "q,epsilon,delta_c,A,C,liminf_ratio\n";
        out.stream() << sol.q << ',' << fixed6(sol.epsilon) << ',' << fixed6(sol.delta_c) << ','
                     << fixed6(sol.A) << ',' << fixed6(sol.C) << ',' << fixed6(sol.liminf_ratio) << '\n';
    }
    return kExitOk;
}

int run_curves(int q, int grid, const std::string& format, const std::string& out_path) {
    if (!mincode::is_prime_power(q)) {
        std::cerr << "error: " << q << " is not a prime power\n";
        return kExitInvalidInput;
    }
    if (grid < 2) {
        std::cerr << "error: --grid must be >= 2\n";
        return kExitInvalidInput;
    }
    const std::vector<mincode::CurveSample> samples = mincode::curve_dump(q, grid);
    Output out(out_path);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : samples) {
            nlohmann::json row = {{"delta", s.delta}};
            for (const auto& [name, v] : s.values) row[name] = v;
            j.push_back(row);
        }
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "delta,minimal_cap,mrrw,plotkin,singleton\n";
        for (const auto& s : samples)
            out.stream() << fixed6(s.delta) << ',' << fixed6(s.values.at("minimal_cap")) << ','
                         << fixed6(s.values.at("mrrw")) << ',' << fixed6(s.values.at("plotkin")) << ','
                         << fixed6(s.values.at("singleton")) << '\n';
    }
    return kExitOk;
}

int run_search(int N, int threads, const std::string& out_path) {
    if (N < 1 || N > 12) {
        std::cerr << "error: --N must be in [1, 12]\n";
        return kExitInvalidInput;
    }
    mincode::SearchConfig cfg;
    cfg.threads = std::max(1, threads);
    const mincode::SearchCertificate cert = mincode::search(N, cfg);
    Output out(out_path);
    out.stream() << mincode::certificate_to_json(cert).dump(2) << '\n';
    return cert.outcome == mincode::SearchCertificate::Outcome::Found ? kExitOk : kExitNegative;
}

int run_check(const std::string& matrix_path) {
    std::unique_ptr<mincode::LinearCode> code;
    try {
        code = std::make_unique<mincode::LinearCode>(mincode::read_matrix_file(matrix_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    try {
        const mincode::WeightProfile wp = mincode::weight_profile(*code);
        const mincode::MinimalityResult min = mincode::is_minimal_code(*code);
        const int q = code->q(), k = code->k(), n = code->n();

        std::cout << "code: [" << n << ", " << k << ", " << wp.d_min << "]_" << q << '\n';
        std::cout << "d_min: " << wp.d_min << '\n';
        std::cout << "w_max: " << wp.w_max << '\n';
        std::cout << "minimal: " << (min.minimal ? "yes" : "no") << '\n';
        if (!min.minimal && min.witness) {
            auto dump = [](const mincode::Codeword& c) {
                std::string s;
                for (std::uint8_t v : c.coords) s.push_back(static_cast<char>('0' + v));
                return s;
            };
            std::cout << "witness: support(" << dump(min.witness->first) << ") strictly inside support("
                      << dump(min.witness->second) << ")\n";
        }
        std::cout << "ashikhmin_barg: " << (mincode::ashikhmin_barg_check(*code) ? "yes" : "no") << '\n';
        if (min.minimal) {
            std::cout << "weight_cap (w <= n-k+1): " << (wp.w_max <= n - k + 1 ? "ok" : "VIOLATED") << '\n';
            std::cout << "distance_floor (d >= (q-1)(k-1)+1): "
                      << (wp.d_min >= (q - 1) * (k - 1) + 1 ? "ok" : "VIOLATED") << '\n';
        }
        const bool strong =
            mincode::is_strong_blocking_set(mincode::projective_points(*code), k, q).strong;
        std::cout << "strong_blocking_set: " << (strong ? "yes" : "no") << '\n';
        if (strong != min.minimal) {
            std::cerr << "error: minimality and strong-blocking-set checks disagree (internal bug)\n";
            return kExitInternal;
        }
        return min.minimal ? kExitOk : kExitNegative;
    } catch (const mincode::DimensionTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const mincode::DegenerateColumn& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

int run_certify(const std::string& cert_path) {
    mincode::SearchCertificate cert;
    try {
        cert = mincode::read_certificate_file(cert_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    try {
        mincode::verify_certificate(cert);
        std::cout << "certificate valid: N=" << cert.N << ", outcome="
                  << (cert.outcome == mincode::SearchCertificate::Outcome::Found ? "found" : "exhausted")
                  << '\n';
        return kExitOk;
    } catch (const mincode::VerificationFailed& e) {
        std::cout << "certificate INVALID: " << e.what() << '\n';
        return kExitNegative;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for lower bounds on the length of minimal linear codes"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    std::vector<int> q_list;
    int q = 2;
    int grid = 100;
    int N = 1;
    int threads = 1;
    std::string matrix_path;
    std::string cert_path;

    CLI::App* bounds = app.add_subcommand("bounds", "Asymptotic bound tables and curves");
    bounds->require_subcommand(1);

    CLI::App* table = bounds->add_subcommand("table", "Liminf and epsilon comparison table");
    table->add_option("--q-list", q_list, "Comma-separated prime powers")->required()->delimiter(',');
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output", out_path, "Output file (default stdout)");

    CLI::App* epsilon = bounds->add_subcommand("epsilon", "Explicit epsilon(q) record");
    epsilon->add_option("--q", q, "Prime power")->required();
    epsilon->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    epsilon->add_option("--output", out_path, "Output file (default stdout)");

    CLI::App* curves = bounds->add_subcommand("curves", "Bound curves on a delta grid");
    curves->add_option("--q", q, "Prime power")->required();
    curves->add_option("--grid", grid, "Grid size (>= 2)");
    curves->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    curves->add_option("--output", out_path, "Output file (default stdout)");

    CLI::App* search_cmd = app.add_subcommand("search", "Exhaustive [3N, N+1] minimal code search");
    search_cmd->add_option("--N", N, "Family parameter N = k-1, in [1, 12]")->required();
    search_cmd->add_option("--threads", threads, "Worker threads for the search tree");
    search_cmd->add_option("--output", out_path, "Certificate output file (default stdout)");

    CLI::App* check_cmd = app.add_subcommand("check", "Minimality report for a generator matrix file");
    check_cmd->add_option("--matrix", matrix_path, "Matrix file (q k n header + digit rows)")->required();

    CLI::App* certify_cmd = app.add_subcommand("certify", "Re-verify a search certificate");
    certify_cmd->add_option("--cert", cert_path, "Certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (table->parsed()) return run_table(q_list, format, out_path);
        if (epsilon->parsed()) return run_epsilon(q, format, out_path);
        if (curves->parsed()) return run_curves(q, grid, format, out_path);
        if (search_cmd->parsed()) return run_search(N, threads, out_path);
        if (check_cmd->parsed()) return run_check(matrix_path);
        if (certify_cmd->parsed()) return run_certify(cert_path);
    } catch (const mincode::NotPrimePower& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const mincode::Unsupported& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const mincode::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
