#include "synthts/cli.hpp"

#include "commands.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace synthts::cli {

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingColumn:
        case ErrorKind::UnparseableValue:
        case ErrorKind::EmptyFile:
        case ErrorKind::Io:
            return kIo;
        case ErrorKind::InvalidSeries:
        case ErrorKind::LengthMismatch:
        case ErrorKind::SeriesTooShort:
        case ErrorKind::ZeroLoad:
            return kValidation;
        case ErrorKind::InvalidChunkLength:
        case ErrorKind::InvalidLag:
        case ErrorKind::KTooLarge:
        case ErrorKind::InvalidSash:
        case ErrorKind::PTooLarge:
        case ErrorKind::InvalidKernel:
        case ErrorKind::InvalidDistributionParams:
        case ErrorKind::InvalidProbability:
        case ErrorKind::EmptyGrid:
        case ErrorKind::OutOfRange:
        case ErrorKind::InvalidArgument:
        case ErrorKind::Config:
            return kConfig;
    }
    return kFailure;
}

namespace {

struct Subcommand {
    CLI::App* app = nullptr;
    std::function<void(const RunContext&, std::ostream&)> handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Synthetic hourly series ensembles: bootstrap generation, perturbation and adequacy analysis",
                 args.empty() ? "synthts" : args.front()};
    app.require_subcommand(1);
    app.set_version_flag("--version", "synthts 1.0.0");

    std::string config_path;
    std::uint64_t seed = 0;
    std::size_t replicates = 0;
    std::size_t threads = 0;
    std::size_t chunk_length = 0;
    std::string output;

    std::vector<Subcommand> subcommands;
    const auto add = [&](const char* name, const char* description, auto handler) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("-c,--config", config_path, "JSON run configuration")->required();
        sub->add_option("--seed", seed, "master seed (overrides the config)");
        sub->add_option("--threads", threads, "worker threads, 0 = all cores (overrides the config)");
        sub->add_option("-o,--output", output, "output directory (overrides the config)");
        subcommands.push_back({sub, handler});
        return sub;
    };
    add("generate", "bootstrap an ensemble of synthetic series (nnlb or sbb)", cmd_generate)
        ->add_option("-B,--replicates", replicates, "number of series (overrides the config)");
    add("perturb", "shift a series by incremental selection or altered difference", cmd_perturb);
    add("analyze", "summary table and exceedance statistics of an ensemble", cmd_analyze)
        ->add_option("-l,--chunk-length", chunk_length, "hours per chunk (overrides the config)");
    add("vre", "renewable adequacy: fixed weights, weight sweep, ensemble shortfall", cmd_vre);

    // CLI11 consumes a reversed argument list without the program name.
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        for (const auto& s : subcommands) {
            if (s.app->parsed()) {
                err << s.app->help();
                return kConfig;
            }
        }
        err << app.help();
        return kConfig;
    }

    for (const auto& s : subcommands) {
        if (!s.app->parsed()) continue;
        Overrides ov;
        if (s.app->count("--seed")) ov.seed = seed;
        if (s.app->count("--threads")) ov.threads = threads;
        if (s.app->count("--output")) ov.output = output;
        if (s.app->get_option_no_throw("--replicates") && s.app->count("--replicates")) ov.replicates = replicates;
        if (s.app->get_option_no_throw("--chunk-length") && s.app->count("--chunk-length")) {
            ov.chunk_length = chunk_length;
        }
        try {
            const auto ctx = load_run(config_path, ov);
            s.handler(ctx, out);
            return kOk;
        } catch (const Error& e) {
            err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
            return exit_code_for(e.kind());
        } catch (const std::filesystem::filesystem_error& e) {
            err << "error [io]: " << e.what() << '\n';
            return kIo;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kFailure;
        }
    }
    return kFailure;
}

}  // namespace synthts::cli
