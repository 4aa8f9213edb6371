#include "gysin/error.hpp"
#include "gysin/job.hpp"
#include "gysin/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gysin;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::input, "cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// One set of job flags per verb subcommand. Values only count as overrides
// when the flag was actually given, so file values survive unset flags.
struct JobCmd {
    CLI::App* cmd = nullptr;
    std::string input_path;
    std::string family, twist, base, f, format;
    int n = 0, rank = 0, cutoff = 0;
    std::vector<int> dims, mu;

    void attach(CLI::App* c) {
        cmd = c;
        cmd->add_option("--input", input_path,
                        "JSON job document; inline flags override its fields");
        cmd->add_option("--family", family, "A, C, BD, KL_A or KL_C");
        cmd->add_option("--n", n, "bundle parameter n");
        cmd->add_option("--rank", rank, "bundle rank (family BD only)");
        cmd->add_option("--dims", dims, "flag dimensions d_1,..,d_m")->delimiter(',');
        cmd->add_option("--mu", mu, "strict partition mu_1,..,mu_d")->delimiter(',');
        cmd->add_option("--twist", twist, "formal or zero");
        cmd->add_option("--base", base, "formal or trivial");
        cmd->add_option("--f", f, "input class expression in x1..xd");
        cmd->add_flag("--halve", "divide the result by 2 (even orthogonal, d = n)");
        cmd->add_option("--cutoff", cutoff, "drop grades above this in the result");
        cmd->add_option("--format", format, "text or structured");
    }

    JobDraft overrides() const {
        JobDraft d;
        if (cmd->count("--family")) d.geometry.family = family;
        if (cmd->count("--n")) d.geometry.n = n;
        if (cmd->count("--rank")) d.geometry.rank = rank;
        if (cmd->count("--dims")) d.geometry.dims = dims;
        if (cmd->count("--mu")) d.geometry.mu = mu;
        if (cmd->count("--twist")) d.geometry.twist = twist;
        if (cmd->count("--base")) d.geometry.base = base;
        if (cmd->count("--f")) d.f = f;
        if (cmd->count("--halve")) d.halve = true;
        if (cmd->count("--cutoff")) d.cutoff = cutoff;
        if (cmd->count("--format")) d.format = format;
        return d;
    }

    JobDraft merged() const {
        JobDraft base_draft;
        if (cmd->count("--input")) base_draft = parse_job_document(slurp(input_path));
        return merge_drafts(base_draft, overrides());
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gysin pushforwards for flag bundles"};
    app.require_subcommand(1);

    int exit_code = 0;
    auto run_verb = [&exit_code](Verb verb, const JobCmd& jc) {
        JobOutput out = run_job(verb, jc.merged());
        std::cout << out.text;
        exit_code = out.exit_code;
    };

    JobCmd compute_cmd, oracle_cmd, check_cmd;
    compute_cmd.attach(app.add_subcommand(
        "compute", "pushforward via the closed coefficient formula"));
    compute_cmd.cmd->callback([&] { run_verb(Verb::compute, compute_cmd); });

    oracle_cmd.attach(app.add_subcommand(
        "oracle", "pushforward via the stepwise tower (families A and KL_A)"));
    oracle_cmd.cmd->callback([&] { run_verb(Verb::oracle, oracle_cmd); });

    check_cmd.attach(app.add_subcommand(
        "check", "run both paths and diff; exits 1 on mismatch"));
    check_cmd.cmd->callback([&] { run_verb(Verb::check, check_cmd); });

    CLI::App* degree = app.add_subcommand("degree", "classical enumerative degrees");
    degree->require_subcommand(1);

    int gr_d = 0, gr_n = 0, lg_n = 0, quad_rank = 0;
    CLI::App* gr = degree->add_subcommand("grassmannian", "degree of G(d, n)");
    gr->add_option("--d", gr_d, "subspace dimension")->required();
    gr->add_option("--n", gr_n, "ambient dimension")->required();
    gr->callback([&] { std::cout << grassmannian_degree(gr_d, gr_n) << "\n"; });

    CLI::App* lg = degree->add_subcommand("lg", "degree of LG(n)");
    lg->add_option("--n", lg_n, "Lagrangian subspace dimension")->required();
    lg->callback([&] { std::cout << lg_degree(lg_n) << "\n"; });

    CLI::App* quad = degree->add_subcommand("quadric", "degree of the rank-r quadric");
    quad->add_option("--rank", quad_rank, "rank of the orthogonal bundle")->required();
    quad->callback([&] { std::cout << quadric_degree(quad_rank) << "\n"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const gysin::Error& e) {
        std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return static_cast<int>(e.code());
    }
    return exit_code;
}
