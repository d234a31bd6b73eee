// Command-line front end for the fuchsia library. Talks to the library
// exclusively through the C API in fuchsia/fuchsia.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fuchsia/fuchsia.h"

namespace {

struct Options {
  std::string input;
  std::string output;  // empty: stdout
  int n_generators = 0;
  int depth = 0;
  long tile_cap = 0;
  std::string viewport;  // "XMIN:XMAX:YMAX"
  std::string format;    // "json" or "svg"
  double stroke_width = 1.25;
  std::string palette = "default";
  bool labels = false;
  int width_px = 800;
};

int exit_code_for(fcs_status status) {
  if (status == FCS_OK) return 0;
  if (status == FCS_ERR_PARSE) return 2;
  return 1;
}

int fail(fcs_status status) {
  std::cerr << "error: " << fcs_last_error() << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_output(const std::string& path, const char* data) {
  if (path.empty()) {
    std::cout << data;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return static_cast<bool>(out);
}

bool parse_viewport(const std::string& text, fcs_render_options& options) {
  double xmin = 0.0, xmax = 0.0, ymax = 0.0;
  char trailing = '\0';
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &xmin, &xmax, &ymax, &trailing) != 3) {
    return false;
  }
  options.use_default_viewport = 0;
  options.xmin = xmin;
  options.xmax = xmax;
  options.ymax = ymax;
  return true;
}

int emit(const Options& opt, fcs_status status, char* text) {
  if (status != FCS_OK && text == nullptr) return fail(status);
  const bool written = write_output(opt.output, text);
  fcs_string_free(text);
  if (!written) {
    std::cerr << "error: cannot write output to " << opt.output << "\n";
    return 2;
  }
  if (status != FCS_OK) {
    std::cerr << "error: " << fcs_last_error() << "\n";
    return exit_code_for(status);
  }
  return 0;
}

int run_build_flute(const Options& opt, const std::string& spec) {
  fcs_flute* flute = nullptr;
  fcs_status status = fcs_flute_build(spec.c_str(), opt.n_generators, &flute);
  if (status != FCS_OK) return fail(status);
  char* report = nullptr;
  status = fcs_flute_report(flute, &report);
  fcs_flute_free(flute);
  if (status != FCS_OK) return fail(status);
  return emit(opt, FCS_OK, report);
}

int run_build_monster(const Options& opt, const std::string& spec) {
  fcs_monster* monster = nullptr;
  fcs_status status = fcs_monster_build(spec.c_str(), &monster);
  if (status != FCS_OK) return fail(status);
  char* report = nullptr;
  status = fcs_monster_report(monster, &report);
  fcs_monster_free(monster);
  if (status != FCS_OK) return fail(status);
  return emit(opt, FCS_OK, report);
}

int run_classify(const Options& opt, const std::string& spec) {
  char* report = nullptr;
  const fcs_status status = fcs_classify_report(spec.c_str(), &report);
  if (status != FCS_OK) return fail(status);
  return emit(opt, FCS_OK, report);
}

int run_fn_params(const Options& opt, const std::string& spec) {
  char* report = nullptr;
  const fcs_status status =
      fcs_fn_params_report(spec.c_str(), opt.n_generators, &report);
  if (status != FCS_OK) return fail(status);
  return emit(opt, FCS_OK, report);
}

int run_check(const Options& opt, const std::string& spec) {
  char* report = nullptr;
  const fcs_status status = fcs_check(spec.c_str(), &report);
  if (report == nullptr) return fail(status);
  return emit(opt, status, report);
}

int run_tiles_or_svg(const Options& opt, const std::string& spec, bool svg) {
  fcs_presentation* presentation = nullptr;
  fcs_status status =
      fcs_presentation_build(spec.c_str(), opt.n_generators, &presentation);
  if (status != FCS_OK) return fail(status);

  char* text = nullptr;
  if (svg) {
    fcs_render_options render;
    fcs_render_options_init(&render);
    render.depth = opt.depth;
    render.tile_cap = opt.tile_cap;
    render.stroke_width = opt.stroke_width;
    render.labels = opt.labels ? 1 : 0;
    render.palette = opt.palette.c_str();
    render.width_px = opt.width_px;
    if (!opt.viewport.empty() && !parse_viewport(opt.viewport, render)) {
      fcs_presentation_free(presentation);
      std::cerr << "error: --viewport expects XMIN:XMAX:YMAX\n";
      return 1;
    }
    status = fcs_render_svg(presentation, &render, &text);
  } else {
    status = fcs_tessellation_report(presentation, opt.depth, opt.tile_cap, &text);
  }
  fcs_presentation_free(presentation);
  if (status != FCS_OK) return fail(status);
  return emit(opt, FCS_OK, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flute and Loch Ness monster Fuchsian groups: construction, "
               "classification, Fenchel-Nielsen lengths, tessellation, SVG"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_output = true) {
    cmd->add_option("--input", opt.input, "Path to the JSON spec")
        ->required()
        ->check(CLI::ExistingFile);
    if (with_output) {
      cmd->add_option("--output", opt.output, "Output path (default: stdout)");
    }
  };

  CLI::App* build_flute = app.add_subcommand(
      "build-flute", "Build a flute group and report its generators");
  add_common(build_flute);
  build_flute->add_option("--n-generators", opt.n_generators,
                          "Override the spec's generator count");

  CLI::App* build_monster = app.add_subcommand(
      "build-monster", "Build a monster group and report its generator pairs");
  add_common(build_monster);

  CLI::App* classify = app.add_subcommand(
      "classify", "First/second-kind and parabolicity verdict for a spec");
  add_common(classify);

  CLI::App* fn_params = app.add_subcommand(
      "fn-params", "Fenchel-Nielsen length table for a flute spec");
  add_common(fn_params);
  fn_params->add_option("--n-generators", opt.n_generators,
                        "Override the spec's generator count");

  CLI::App* tessellate =
      app.add_subcommand("tessellate", "Enumerate orbit tiles of the fundamental domain");
  add_common(tessellate);
  tessellate->add_option("--n-generators", opt.n_generators,
                         "Override the spec's generator count");
  tessellate->add_option("--depth", opt.depth, "Maximum word length")
      ->default_val(2);
  tessellate->add_option("--tile-cap", opt.tile_cap, "Orbit tile budget");
  tessellate->add_option("--format", opt.format, "json (default) or svg")
      ->check(CLI::IsMember({"json", "svg"}));

  CLI::App* render = app.add_subcommand("render", "Render the configuration as SVG");
  add_common(render);
  render->add_option("--n-generators", opt.n_generators,
                     "Override the spec's generator count");
  render->add_option("--depth", opt.depth, "Maximum word length")->default_val(0);
  render->add_option("--tile-cap", opt.tile_cap, "Orbit tile budget");
  render->add_option("--viewport", opt.viewport, "World window XMIN:XMAX:YMAX");
  render->add_option("--format", opt.format, "svg (default) or json")
      ->check(CLI::IsMember({"json", "svg"}));
  render->add_option("--stroke-width", opt.stroke_width, "Stroke width in px");
  render->add_option("--palette", opt.palette, "default or mono")
      ->check(CLI::IsMember({"default", "mono"}));
  render->add_flag("--labels", opt.labels, "Label the identity tile's arcs");
  render->add_option("--width", opt.width_px, "Image width in px");

  CLI::App* check = app.add_subcommand(
      "check", "Run the full invariant suite against a spec");
  add_common(check);
  check->add_option("--n-generators", opt.n_generators,
                    "Override the spec's generator count");

  CLI11_PARSE(app, argc, argv);

  std::string spec;
  if (!read_file(opt.input, spec)) {
    std::cerr << "error: cannot read " << opt.input << "\n";
    return 2;
  }

  if (build_flute->parsed()) return run_build_flute(opt, spec);
  if (build_monster->parsed()) return run_build_monster(opt, spec);
  if (classify->parsed()) return run_classify(opt, spec);
  if (fn_params->parsed()) return run_fn_params(opt, spec);
  if (check->parsed()) return run_check(opt, spec);
  if (tessellate->parsed()) return run_tiles_or_svg(opt, spec, opt.format == "svg");
  if (render->parsed()) return run_tiles_or_svg(opt, spec, opt.format != "json");
  return 1;
}
