// Command-line front end: blur synthesis, blind deblurring, metric evaluation
// and kernel generation over PGM/PPM files.

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

#include "fdeblur/cli_config.hpp"
#include "fdeblur/errors.hpp"
#include "fdeblur/metrics.hpp"
#include "fdeblur/pipeline.hpp"
#include "fdeblur/pnm_io.hpp"
#include "fdeblur/synth.hpp"

namespace {

using namespace fdeblur;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

struct PathArgs {
    std::string input, output, truth, restored;
    std::string save_kernel, save_kernel_txt, output_txt;
    std::string kernel_spec, kernel_path, kernel_truth_path;
    std::string config_file;
};

pipeline::PipelineConfig pipeline_config(const cli::ToolOptions& opts) {
    pipeline::PipelineConfig cfg;
    cfg.kernel_size = opts.kernel_size;
    cfg.scale = opts.scale;
    cfg.gamma1 = opts.gamma1;
    cfg.gamma2 = opts.gamma2;
    cfg.sigma = opts.sigma;
    cfg.alpha = opts.alpha;
    cfg.lambda = opts.lambda;
    cfg.gl_taps = opts.gl_taps;
    cfg.trunc_factor = opts.trunc_factor;
    cfg.finisher_gamma1_scale = opts.finisher_gamma1_scale;
    return cfg;
}

Kernel load_kernel(const std::string& path) {
    Kernel k;
    if (path.size() > 4 && path.substr(path.size() - 4) == ".txt") {
        k = io::read_kernel_text(path);
    } else {
        io::LoadedImage img = io::read_image(path);
        k = Kernel::from_grid(img.color() ? pipeline::luminance(img.planes) : img.gray());
    }
    k.clamp_nonnegative();
    k.normalize();
    return k;
}

void print_diagnostics(const std::vector<pipeline::LevelDiagnostics>& levels) {
    for (const auto& d : levels) {
        std::printf("level=%d kernel=%dx%d zero_count=%ld zero_fraction=%.6f",
                    d.level, d.kernel_rows, d.kernel_cols, d.zero_count, d.zero_fraction);
        if (d.has_psnr) std::printf(" psnr=%.6f", d.psnr);
        std::printf("\n");
    }
}

int run_deblur(const PathArgs& paths, const cli::ToolOptions& opts) {
    io::LoadedImage input = io::read_image(paths.input);
    pipeline::PipelineConfig cfg = pipeline_config(opts);

    std::optional<Image> truth;
    if (!paths.truth.empty()) {
        truth = io::read_image(paths.truth).gray();
        cfg.ground_truth = &*truth;
    }

    if (input.color()) {
        pipeline::ColorDeblurResult result = pipeline::deblur_blind_color(input.planes, cfg);
        for (const auto& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
        print_diagnostics(result.levels);
        io::write_image_rgb(paths.output, result.channels);
        if (!paths.save_kernel.empty()) io::write_kernel_image(paths.save_kernel, result.kernel);
        if (!paths.save_kernel_txt.empty())
            io::write_kernel_text(paths.save_kernel_txt, result.kernel);
    } else {
        pipeline::DeblurResult result = pipeline::deblur_blind(input.gray(), cfg);
        for (const auto& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
        print_diagnostics(result.levels);
        io::write_image(paths.output, result.restored);
        if (!paths.save_kernel.empty()) io::write_kernel_image(paths.save_kernel, result.kernel);
        if (!paths.save_kernel_txt.empty())
            io::write_kernel_text(paths.save_kernel_txt, result.kernel);
    }
    return kExitOk;
}

int run_blur(const PathArgs& paths, const cli::ToolOptions& opts) {
    io::LoadedImage input = io::read_image(paths.input);
    Kernel k = synth::make_kernel(cli::parse_kernel_spec(paths.kernel_spec));

    synth::NoiseSpec noise;
    if (opts.noise_std > 0.0) {
        noise.kind = synth::NoiseKind::Gaussian;
        noise.std = opts.noise_std;
        noise.seed = opts.seed;
    }

    std::vector<Image> blurred;
    for (size_t ch = 0; ch < input.planes.size(); ++ch) {
        synth::NoiseSpec channel_noise = noise;
        channel_noise.seed = noise.seed + ch;  // independent field per channel
        blurred.push_back(synth::blur(input.planes[ch], k, opts.boundary, channel_noise));
    }

    if (input.color())
        io::write_image_rgb(paths.output, blurred);
    else
        io::write_image(paths.output, blurred.front());
    if (!paths.save_kernel.empty()) io::write_kernel_image(paths.save_kernel, k);
    if (!paths.save_kernel_txt.empty()) io::write_kernel_text(paths.save_kernel_txt, k);
    return kExitOk;
}

int run_evaluate(const PathArgs& paths) {
    io::LoadedImage restored = io::read_image(paths.restored);
    io::LoadedImage truth = io::read_image(paths.truth);
    Image a = restored.color() ? pipeline::luminance(restored.planes) : restored.gray();
    Image b = truth.color() ? pipeline::luminance(truth.planes) : truth.gray();

    metrics::MetricReport report = metrics::evaluate(a, b);
    if (!paths.kernel_path.empty() && !paths.kernel_truth_path.empty())
        report.kernel_xcorr =
            metrics::kernel_xcorr(load_kernel(paths.kernel_path),
                                  load_kernel(paths.kernel_truth_path));
    std::fputs(metrics::serialize(report).c_str(), stdout);
    return kExitOk;
}

int run_kernel(const PathArgs& paths) {
    Kernel k = synth::make_kernel(cli::parse_kernel_spec(paths.kernel_spec));
    if (!paths.output.empty()) io::write_kernel_image(paths.output, k);
    if (!paths.output_txt.empty()) io::write_kernel_text(paths.output_txt, k);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blind image deblurring via framelet-regularized PSF estimation"};
    app.require_subcommand(1);

    PathArgs paths;
    cli::ToolOptions opts;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kernel-size", opts.kernel_size, "PSF support (odd)");
        cmd->add_option("--lambda", opts.lambda, "fractional gradient order");
        cmd->add_option("--alpha", opts.alpha, "l1 subtraction weight in [0,1]");
        cmd->add_option("--gamma1", opts.gamma1, "latent image regularization weight");
        cmd->add_option("--gamma2", opts.gamma2, "kernel regularization weight");
        cmd->add_option("--sigma", opts.sigma, "intensity prior weight");
        cmd->add_option("--scale", opts.scale, "pyramid scale factor");
        cmd->add_option("--taps", opts.gl_taps, "fractional stencil length");
        cmd->add_option("--trunc-factor", opts.trunc_factor, "gradient truncation factor");
        cmd->add_option("--config", paths.config_file, "key = value config file");
    };

    CLI::App* deblur = app.add_subcommand("deblur", "blind-deblur an image");
    deblur->add_option("--input", paths.input, "blurred image (PGM/PPM)")->required();
    deblur->add_option("--output", paths.output, "restored image path")->required();
    deblur->add_option("--save-kernel", paths.save_kernel, "write the kernel as PGM");
    deblur->add_option("--save-kernel-txt", paths.save_kernel_txt,
                       "write the kernel as a text grid");
    deblur->add_option("--truth", paths.truth, "ground truth for per-level PSNR");
    add_solver_flags(deblur);

    CLI::App* blur = app.add_subcommand("blur", "synthesize a blurred image");
    blur->add_option("--input", paths.input, "sharp image (PGM/PPM)")->required();
    blur->add_option("--output", paths.output, "blurred image path")->required();
    blur->add_option("--kernel", paths.kernel_spec, "kernel spec kind[:p1[:p2]]")->required();
    blur->add_option("--noise", opts.noise_std, "Gaussian noise std on [0,1] range");
    blur->add_option("--seed", opts.seed, "noise seed");
    blur->add_option("--boundary", [&](const std::vector<std::string>& v) {
        opts.boundary = cli::parse_boundary(v.front());
        return true;
    }, "boundary mode: zero|periodic|reflexive");
    blur->add_option("--save-kernel", paths.save_kernel, "write the kernel as PGM");
    blur->add_option("--save-kernel-txt", paths.save_kernel_txt,
                     "write the kernel as a text grid");
    blur->add_option("--config", paths.config_file, "key = value config file");

    CLI::App* evaluate = app.add_subcommand("evaluate", "compare a restoration to truth");
    evaluate->add_option("--restored", paths.restored, "restored image")->required();
    evaluate->add_option("--truth", paths.truth, "ground-truth image")->required();
    evaluate->add_option("--kernel", paths.kernel_path, "estimated kernel (PGM or txt)");
    evaluate->add_option("--kernel-truth", paths.kernel_truth_path, "reference kernel");

    CLI::App* kernel = app.add_subcommand("kernel", "generate a kernel image");
    kernel->add_option("--spec", paths.kernel_spec, "kernel spec kind[:p1[:p2]]")->required();
    kernel->add_option("--output", paths.output, "kernel as max-normalized PGM");
    kernel->add_option("--output-txt", paths.output_txt, "kernel as a text grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        // Config file fills in whatever the command line did not pin down.
        if (!paths.config_file.empty()) {
            CLI::App* active = app.get_subcommands().front();
            for (const auto& [key, value] : cli::load_config(paths.config_file)) {
                std::string flag = "--" + key;
                for (auto& c : flag)
                    if (c == '_') c = '-';
                const CLI::Option* opt = active->get_option_no_throw(flag);
                if (opt && opt->count() > 0) continue;  // explicit flag wins
                cli::apply_option(opts, key, value);
            }
        }

        if (deblur->parsed()) return run_deblur(paths, opts);
        if (blur->parsed()) return run_blur(paths, opts);
        if (evaluate->parsed()) return run_evaluate(paths);
        if (kernel->parsed()) return run_kernel(paths);
        return kExitUsage;
    } catch (const FormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const DimensionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitComputation;
    }
}
