#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mdpc/errors.hpp"
#include "mdpc/harness.hpp"
#include "mdpc/session.hpp"
#include "serve.hpp"

namespace {

struct Common {
  std::string interaction = "dnd";
  std::string model;
  double snap = 0.0;
  double hysteresis = 5.0;
  double attraction = 10.0;

  void add_to(CLI::App* app) {
    app->add_option("-i,--interaction", interaction, "scrollbar | dnd | guides | calendar")->required();
    app->add_option("-m,--model", model, "initial model JSON (default: built-in sample)");
    app->add_option("--snap", snap, "calendar snap step in minutes, 0 = off");
    app->add_option("--hysteresis", hysteresis, "hysteresis radius in px");
    app->add_option("--attraction", attraction, "guide attraction distance in px");
  }

  mdpc::InteractionKind kind() const { return mdpc::parse_interaction_kind(interaction); }

  mdpc::ModelStore initial_model() const {
    return model.empty() ? mdpc::default_model(kind()) : mdpc::load_model(model);
  }

  mdpc::InteractionConfig config() const {
    mdpc::InteractionConfig cfg;
    cfg.snapMinutes = snap;
    cfg.hysteresisRadius = hysteresis;
    cfg.attractionDistance = attraction;
    return cfg;
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw mdpc::Error("cannot open " + path + " for writing");
  }
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MDPC interaction toolkit: trace replay and live sessions"};
  app.require_subcommand(1);

  Common runOpts;
  std::string tracePath, expectPath, picking, display, reportPath;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "replay a JSON Lines trace and print a report");
  runOpts.add_to(run);
  run->add_option("-t,--trace", tracePath, "trace file (JSON Lines)")->required();
  run->add_option("-e,--expect", expectPath, "expectations file (JSON array)");
  run->add_option("--dump-picking", picking, "write the final pick buffer as PPM");
  run->add_option("--dump-display", display, "write the final display list as JSON");
  run->add_option("--report", reportPath, "write the report here instead of stdout");
  run->add_option("--seed", seed, "seed recorded in the report");

  Common serveOpts;
  int port = 0;
  int httpPort = 0;
  bool useStdio = false;
  std::string staticDir;
  auto* serve = app.add_subcommand("serve", "run a live NDJSON session");
  serveOpts.add_to(serve);
  serve->add_option("-p,--port", port, "NDJSON over TCP on this port");
  serve->add_flag("--stdio", useStdio, "NDJSON over stdin/stdout");
  serve->add_option("--http-port", httpPort, "HTTP port for static files and POST /session");
  serve->add_option("--static", staticDir, "directory served over HTTP");

  std::uint64_t genSeed = 1;
  std::size_t gestures = 10;
  double width = 800, height = 600;
  std::string genOut;
  auto* gen = app.add_subcommand("gen", "write a seeded random pointer trace");
  gen->add_option("--seed", genSeed, "RNG seed");
  gen->add_option("--gestures", gestures, "press/move/release gestures");
  gen->add_option("--width", width, "window width");
  gen->add_option("--height", height, "window height");
  gen->add_option("-o,--out", genOut, "output file")->required();

  std::string modelKind;
  auto* model = app.add_subcommand("model", "print the built-in sample model");
  model->add_option("-i,--interaction", modelKind, "scrollbar | dnd | guides | calendar")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      mdpc::Driver driver(mdpc::make_interaction(runOpts.kind(), runOpts.initial_model(), runOpts.config()));
      const auto trace = mdpc::load_trace(tracePath);
      const auto expectations =
          expectPath.empty() ? std::vector<mdpc::Expectation>{} : mdpc::load_expectations(expectPath);
      const auto report = mdpc::replay(driver, trace, expectations, seed);
      if (!picking.empty()) {
        driver.frame().pickBuffer.write_ppm(picking);
      }
      if (!display.empty()) {
        write_text(display, mdpc::display_json(driver.frame().display) + "\n");
      }
      const std::string text = report.to_json().dump(2) + "\n";
      if (reportPath.empty()) {
        std::cout << text;
      } else {
        write_text(reportPath, text);
      }
      return report.passed() ? 0 : 1;
    }
    if (*serve) {
      const auto kind = serveOpts.kind();
      const auto initial = serveOpts.initial_model();
      const auto cfg = serveOpts.config();
      const mdpc::cli::SessionFactory factory = [=] { return std::make_unique<mdpc::Session>(kind, initial, cfg); };
      if (useStdio) {
        auto session = factory();
        mdpc::serve_stream(*session, std::cin, std::cout);
        return 0;
      }
      if (httpPort > 0) {
        return mdpc::cli::serve_http(httpPort, staticDir, factory);
      }
      if (port > 0) {
        return mdpc::cli::serve_tcp(port, factory);
      }
      std::cerr << "serve needs --stdio, --port or --http-port\n";
      return 2;
    }
    if (*gen) {
      mdpc::save_trace(mdpc::random_trace(genSeed, gestures, width, height), genOut);
      return 0;
    }
    if (*model) {
      std::cout << mdpc::to_json(mdpc::default_model(mdpc::parse_interaction_kind(modelKind))).dump(2) << "\n";
      return 0;
    }
  } catch (const mdpc::Error& e) {
    std::cerr << "mdpc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mdpc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
