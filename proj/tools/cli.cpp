#include "cli.hpp"

#include "sigbary/barycenter.hpp"
#include "sigbary/congruence_recovery.hpp"
#include "sigbary/io.hpp"
#include "sigbary/ncpoly.hpp"
#include "sigbary/property_suite.hpp"
#include "sigbary/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <limits>
#include <ostream>

namespace sigbary::cli {

namespace {

const std::vector<std::string> kDefaultOmegas{"1/4", "3/4", "-1/4", "7/5"};

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

TensorSeq load_signature(const std::string& file, std::size_t k) {
    return signature_from_json(read_json_file(file), k);
}

std::vector<PwlPath> load_paths(const std::vector<std::string>& files) {
    std::vector<PwlPath> out;
    for (const auto& f : files) {
        const Json j = read_json_file(f);
        if (!is_path_json(j)) throw Error(f + " is not a path document");
        out.push_back(path_from_json(j));
    }
    return out;
}

int cmd_sig(const CliConfig& c, std::ostream& out) {
    const Json j = read_json_file(c.inputs.front());
    const PwlPath path = path_from_json(j);
    print(out, to_json(sig_pwl(path, c.level)));
    if (c.svg) write_svg(*c.svg, {{path, c.inputs.front(), true}});
    return kOk;
}

int cmd_bary(const CliConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<TensorSeq> members;
    for (const auto& f : c.inputs) members.push_back(load_signature(f, c.level));
    const GroupSample sample(std::move(members));
    const TensorSeq m = bary(sample);
    print(out, to_json(m));
    if (c.check) {
        const TensorSeq r = bary_residual(m, sample);
        if (!r.is_zero()) {
            err << "error: nonzero barycenter residual\n";
            return kDomainError;
        }
        out << "residual: 0\n";
    }
    return kOk;
}

int cmd_recover(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto paths = load_paths(c.inputs);
    if (c.dim && *c.dim != paths.front().dim()) throw Error("inputs do not have the requested dimension");
    const PwlPath result = recover_k2(paths, c.level);
    print(out, to_json(result));

    std::vector<TensorSeq> sigs;
    for (const auto& p : paths) sigs.push_back(sig_pwl(p, 2));
    const TensorSeq target = bary(GroupSample(std::move(sigs)));
    if (sig_pwl(result, 2) != target) {
        err << "error: recovered signature differs from the barycenter\n";
        return kDomainError;
    }
    out << "residual: 0\n";

    if (c.svg) {
        std::vector<PlotPath> plots;
        for (std::size_t i = 0; i < paths.size(); ++i) plots.push_back({paths[i], c.inputs[i], false});
        plots.push_back({result, "recovered", true});
        write_svg(*c.svg, plots);
    }
    return kOk;
}

int cmd_normal_form(const CliConfig& c, std::ostream& out) {
    const Composition alpha(c.alpha);
    const SimultaneousTransform nf = w_alpha_nf(alpha);
    Json j;
    j["alpha"] = c.alpha;
    j["rank"] = nf.matrix.rank;
    if (c.dim) j["recovery_order"] = recovery_order(*c.dim, alpha);
    j["transform"] = to_json(nf.matrix.transform);
    j["normal_form"] = to_json(nf.matrix.normal_form);
    j["vector_image"] = to_json(nf.vector_image);
    print(out, j);
    return kOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
    bool ok = true;
    Json j;
    j["seed"] = c.seed;
    Json props = Json::array();
    for (const auto& r : run_property_suite({c.seed, c.instances})) {
        Json p;
        p["name"] = r.name;
        p["instances"] = r.instances;
        p["failures"] = r.failures;
        if (!r.passed()) p["first_failure"] = r.first_failure;
        ok = ok && r.passed();
        props.push_back(std::move(p));
    }
    j["properties"] = std::move(props);

    Json family = Json::array();
    const std::vector<std::string> omegas = c.omega ? std::vector<std::string>{*c.omega} : kDefaultOmegas;
    for (const auto& text : omegas) {
        const Rational omega = parse_rational(text);
        const PwlPath path(recovery_family_k3(omega));
        const bool match = verify_recovery_k3(omega);
        const bool flat = signed_area(path) == 0;
        ok = ok && match && flat;
        Json f;
        f["omega"] = to_string(omega);
        f["increments"] = to_json(path)["increments"];
        f["signature_matches"] = match;
        f["signed_area"] = to_string(signed_area(path));
        family.push_back(std::move(f));
    }
    j["k3_family"] = std::move(family);

    if (c.show_poly) j["bary_polynomial"] = to_string(build_bary_poly(c.samples, c.level));
    j["passed"] = ok;
    print(out, j);
    return ok ? kOk : kDomainError;
}

int cmd_dim(const CliConfig& c, std::ostream& out) {
    out << lie_algebra_dim(c.dim.value_or(2), c.level) << '\n';
    return kOk;
}

} // namespace

int execute(const CliConfig& c, std::ostream& out, std::ostream& err) {
    try {
        switch (c.command) {
        case Command::Sig: return cmd_sig(c, out);
        case Command::Bary: return cmd_bary(c, out, err);
        case Command::Recover: return cmd_recover(c, out, err);
        case Command::NormalForm: return cmd_normal_form(c, out);
        case Command::Verify: return cmd_verify(c, out);
        case Command::Dim: return cmd_dim(c, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact path signatures, group barycenters and level-2 path recovery", "sigbary"};
    app.require_subcommand(1, 1);
    CliConfig c;

    auto add_level = [&](CLI::App* sub) {
        sub->add_option("-k,--k,--level", c.level, "truncation level")->check(CLI::PositiveNumber);
    };

    auto* sig = app.add_subcommand("sig", "signature of a piecewise-linear path");
    std::string path_file;
    sig->add_option("--path", path_file, "path JSON")->required();
    add_level(sig);
    sig->add_option("--svg", c.svg, "write an SVG plot of the path");

    auto* bary_cmd = app.add_subcommand("bary", "barycenter of signatures or paths");
    bary_cmd->add_option("--inputs", c.inputs, "tensor or path JSON files")->required()->expected(1, -1);
    add_level(bary_cmd);
    bary_cmd->add_flag("--check", c.check, "also print the residual");

    auto* recover = app.add_subcommand("recover", "level-2 recovery of a barycenter path");
    recover->add_option("--inputs", c.inputs, "path JSON files")->required()->expected(1, -1);
    add_level(recover);
    recover->add_option("-d,--d,--dim", c.dim, "expected path dimension")->check(CLI::PositiveNumber);
    recover->add_option("--svg", c.svg, "plot inputs and the recovered path");

    auto* nf = app.add_subcommand("normal-form", "congruence normal form of W_alpha");
    nf->add_option("--alpha", c.alpha, "composition, e.g. 4,6,2")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    nf->add_option("-d,--d,--dim", c.dim, "also report the recovery order in this dimension")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

    auto* verify = app.add_subcommand("verify", "run the randomized property suite");
    add_level(verify);
    verify->add_option("--omega", c.omega, "single k=3 family parameter p/q");
    verify->add_flag("--show-poly", c.show_poly, "print the symbolic barycenter polynomial");
    verify->add_option("-n,--samples", c.samples, "sample count for --show-poly")->check(CLI::PositiveNumber);
    verify->add_option("--instances", c.instances, "instances per property")->check(CLI::PositiveNumber);
    verify->add_option("--seed", c.seed, "random seed");

    auto* dim = app.add_subcommand("dim", "dimension of the free nilpotent Lie algebra");
    dim->add_option("-d,--d,--dim", c.dim, "ambient dimension")->check(CLI::PositiveNumber);
    add_level(dim);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    if (*sig) {
        c.command = Command::Sig;
        c.inputs = {path_file};
    } else if (*bary_cmd) {
        c.command = Command::Bary;
    } else if (*recover) {
        c.command = Command::Recover;
    } else if (*nf) {
        c.command = Command::NormalForm;
    } else if (*verify) {
        c.command = Command::Verify;
    } else {
        c.command = Command::Dim;
    }
    return execute(c, out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace sigbary::cli
