#include "aq/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"aq - homotopy, Andre-Quillen homology, Postnikov envelopes and Poincare "
                 "series of weight-graded simplicial commutative algebras over F_p"};
    app.require_subcommand(1);

    aq::JobConfig cfg;
    std::string tau_list;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", cfg.input_path, "presentation file")->required();
        sub->add_option("--p", cfg.p, "prime (presentation files carry their own)");
        sub->add_option("--N", cfg.N, "simplicial truncation level")->capture_default_str();
        sub->add_option("--W", cfg.W, "weight truncation")->capture_default_str();
        sub->add_option("--T", cfg.T, "series order")->capture_default_str();
        sub->add_option("--tau", tau_list, "comma-separated tau values");
        sub->add_option("--format", cfg.format, "text | json")->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write the report to a file");
        sub->add_option("--seed", cfg.seed, "random seed (corpus generation only)");
    };

    auto* homology = app.add_subcommand("homology", "pi and H^Q tables with oracle checks");
    add_common(homology, true);
    homology->add_flag("--self-test-corrupt", cfg.corrupt_face,
                       "corrupt a face matrix to exercise the invariant guard")
        ->group("");

    auto* ci = app.add_subcommand("ci-check", "complete-intersection verdict");
    add_common(ci, true);

    auto* env = app.add_subcommand("envelope", "Postnikov envelope chain A(1), A(2), ...");
    add_common(env, true);
    env->add_option("--n-max", cfg.n_max, "last envelope stage");

    auto* em = app.add_subcommand("em-series", "Poincare series of S(V,n)");
    add_common(em, false);
    em->add_option("--q", cfg.q, "dim V")->capture_default_str();
    em->add_option("--n", cfg.n, "sphere degree")->capture_default_str();

    auto* ph = app.add_subcommand("phi", "phi-transform asymptotics");
    add_common(ph, false);
    ph->add_option("--q", cfg.q, "dim V")->capture_default_str();
    ph->add_option("--n", cfg.n, "sphere degree")->capture_default_str();

    auto* sus = app.add_subcommand("suspend", "suspension of a presented algebra");
    add_common(sus, true);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (!tau_list.empty()) {
        std::stringstream ss(tau_list);
        std::string piece;
        while (std::getline(ss, piece, ','))
            cfg.tau.push_back(std::stod(piece));
    }

    try {
        aq::Report rep = aq::run(cfg);
        const std::string& payload = cfg.format == "json" ? rep.json : rep.text;
        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.out_path << "\n";
                return 1;
            }
            out << payload;
        } else
            std::cout << payload;
        return rep.exit_code;
    } catch (const aq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == aq::ErrorKind::Invariant ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
