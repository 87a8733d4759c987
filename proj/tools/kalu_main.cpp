#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kalu/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig and multiplicity polynomials of Schubert varieties in a "
                 "Grassmannian"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kalu 0.1.0");

    struct Flags {
        int k = 0;
        int l = 0;
        std::vector<int> I, J, p, q;
        std::string mode, cache_dir;
        bool json = false;
    } f;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--k", f.k, "dimension of the moving subspace")->required();
        cmd->add_option("--l", f.l, "dimension of the ambient space")->required();
        cmd->add_option("--I", f.I, "incidence targets, comma-separated")
            ->required()
            ->delimiter(',');
        cmd->add_option("--J", f.J, "flag dimensions, comma-separated")->required()->delimiter(',');
        cmd->add_flag("--json", f.json, "emit JSON instead of text");
        cmd->add_option("--cache-dir", f.cache_dir,
                        "directory of stored tables (default: KALU_CACHE_DIR)");
    };

    CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial b of a pair of varieties");
    add_common(kl);
    kl->add_option("--p", f.p, "offsets of the containing variety")->required()->delimiter(',');
    kl->add_option("--q", f.q, "offsets of the contained variety")->required()->delimiter(',');

    CLI::App* decompose =
        app.add_subcommand("decompose", "decomposition of the resolution pushforward");
    add_common(decompose);

    CLI::App* smallness = app.add_subcommand("smallness", "smallness of the two resolutions");
    add_common(smallness);
    smallness->add_option("--p", f.p, "offsets of the variety (default all zero)")->delimiter(',');

    CLI::App* scan =
        app.add_subcommand("scan-relevant", "relevant subvarieties and whether they contribute");
    add_common(scan);

    CLI::App* essential =
        app.add_subcommand("essential", "essential conditions, partition and diagram");
    add_common(essential);
    essential->add_option("--p", f.p, "offsets of the variety (default all zero)")->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify", "identity suite over one datum");
    add_common(verify);
    verify->add_option("--mode", f.mode, "pi-oracle, xi-oracle, reconstruction or zelevinsky")
        ->required();

    CLI::App* batch = app.add_subcommand("batch", "run JSON-lines job specs from stdin");
    batch->add_option("--cache-dir", f.cache_dir,
                      "directory of stored tables (default: KALU_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        kalu::TableCache cache(kalu::resolve_cache_dir(f.cache_dir));
        CLI::App* sub = app.get_subcommands().front();
        if (sub == batch) {
            kalu::run_batch(std::cin, std::cout, cache);
            return 0;
        }

        kalu::JobSpec job;
        job.command = sub->get_name();
        job.datum = {f.k, f.l, f.I, f.J};
        const auto given = [&](const char* name) {
            const CLI::Option* opt = sub->get_option_no_throw(name);
            return opt && opt->count() > 0;
        };
        if (given("--p")) job.p = f.p;
        if (given("--q")) job.q = f.q;
        job.mode = f.mode;
        job.json_output = f.json;

        const kalu::JobResult r = kalu::run(job, cache);
        if (r.code != 0 && r.json.contains("error")) {
            std::cerr << r.text << "\n";
        } else if (f.json) {
            std::cout << kalu::dump(r.json) << "\n";
        } else {
            std::cout << r.text << "\n";
        }
        return r.code;
    } catch (const kalu::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
