#include "infgon/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "infgon/cluster.hpp"
#include "infgon/json_io.hpp"
#include "infgon/render.hpp"
#include "infgon/sequences.hpp"

namespace infgon {

namespace {

Arc parse_arc_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(ErrorCode::ParseError, "expected an arc of the form a,b", text);
  const std::string left = text.substr(0, comma);
  const std::string right = text.substr(comma + 1);
  try {
    const std::int64_t a = std::stoll(left);
    if (right == "inf") return Arc::infinite(a);
    return Arc(a, MarkedPoint(std::stoll(right)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "expected an arc of the form a,b", text);
  }
}

std::vector<BigInt> parse_quiddity_arg(const std::string& text) {
  std::vector<BigInt> q;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      q.emplace_back(item);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "quiddity entries must be integers", item);
    }
  }
  if (q.empty()) fail(ErrorCode::ParseError, "empty quiddity sequence");
  return q;
}

bool use_color() {
  return std::getenv("INFGON_NO_COLOR") == nullptr;
}

std::string heading(const std::string& text) {
  if (use_color()) return "\033[1m" + text + "\033[0m\n";
  return text + "\n";
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) fail(ErrorCode::ParseError, "cannot open output file", out_path);
  file << payload;
}

struct CommonOpts {
  std::string window_path;
  std::string out_path;
  bool pretty = false;
};

RenderSpec::Format parse_format(const std::string& name) {
  if (name == "svg") return RenderSpec::Format::Svg;
  if (name == "tikz") return RenderSpec::Format::Tikz;
  if (name == "text") return RenderSpec::Format::Text;
  fail(ErrorCode::ParseError, "format must be svg, tikz or text", name);
}

RenderSpec::Geometry parse_geometry(const std::string& name) {
  if (name == "line") return RenderSpec::Geometry::Line;
  if (name == "disc") return RenderSpec::Geometry::Disc;
  fail(ErrorCode::ParseError, "geometry must be line or disc", name);
}

FriezeKind parse_kind(const std::string& name) {
  if (name == "cc") return FriezeKind::FiniteCC;
  if (name == "right") return FriezeKind::RightHalf;
  if (name == "left") return FriezeKind::LeftHalf;
  fail(ErrorCode::ParseError, "kind must be cc, right or left", name);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& argv, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"computations with triangulations of the completed infinity-gon"};
  app.name("infgon");
  app.require_subcommand(1);

  CommonOpts opt;
  std::string arc_arg, quiddity_arg, desc_arg, word_arg;
  std::string kind_arg = "right", format_arg = "svg", geometry_arg = "line";
  std::string frieze_path;
  std::int64_t at = 0;
  double scale = 40.0;
  bool no_labels = false, specialize_ones = false, decode = false, encode = false;

  auto* validate_cmd = app.add_subcommand("validate", "check window invariants");
  validate_cmd->add_option("--window", opt.window_path, "window JSON file")->required();
  validate_cmd->add_flag("--pretty", opt.pretty);

  auto* mutate_cmd = app.add_subcommand("mutate", "flip a diagonal");
  mutate_cmd->add_option("--window", opt.window_path)->required();
  mutate_cmd->add_option("--arc", arc_arg, "diagonal to flip, as a,b")->required();
  mutate_cmd->add_option("--out", opt.out_path);
  mutate_cmd->add_flag("--pretty", opt.pretty);

  auto* sequence_cmd = app.add_subcommand("sequence", "x- and y-sequences of the fountain");
  sequence_cmd->add_option("--window", opt.window_path)->required();
  sequence_cmd->add_flag("--pretty", opt.pretty);

  auto* penrose_cmd = app.add_subcommand("penrose", "index-word substitution 1->10");
  penrose_cmd->add_option("--encode", word_arg)->excludes("--decode");
  penrose_cmd->add_option("--decode", word_arg);
  penrose_cmd->add_flag("--pretty", opt.pretty);

  auto* frieze_cmd = app.add_subcommand("frieze", "integral frieze from a window or quiddity");
  frieze_cmd->add_option("--window,--from-window", opt.window_path);
  frieze_cmd->add_option("--quiddity", quiddity_arg, "comma-separated quiddity row");
  frieze_cmd->add_option("--kind", kind_arg, "cc, right or left (with --quiddity)");
  frieze_cmd->add_option("--at", at, "anchor vertex (with --quiddity)");
  frieze_cmd->add_option("--out", opt.out_path);
  frieze_cmd->add_flag("--pretty", opt.pretty);

  auto* cluster_cmd = app.add_subcommand("cluster-frieze", "frieze of cluster variables");
  cluster_cmd->add_option("--window", opt.window_path)->required();
  cluster_cmd->add_flag("--specialize-ones", specialize_ones);
  cluster_cmd->add_option("--out", opt.out_path);
  cluster_cmd->add_flag("--pretty", opt.pretty);

  auto* chi_cmd = app.add_subcommand("chi", "crossing string and submodule count");
  chi_cmd->add_option("--window", opt.window_path)->required();
  chi_cmd->add_option("--arc", arc_arg)->required();
  chi_cmd->add_flag("--pretty", opt.pretty);

  auto* module_cmd = app.add_subcommand("module", "arc <-> graded module dictionary");
  module_cmd->add_option("--arc", arc_arg, "arc a,b (b may be inf)");
  module_cmd->add_option("--desc", desc_arg,
                         "module descriptor: projective,J | ideal,K,J | cy,J");
  module_cmd->add_flag("--pretty", opt.pretty);

  auto* render_cmd = app.add_subcommand("render", "SVG/TikZ/text pictures");
  render_cmd->add_option("--window", opt.window_path);
  render_cmd->add_option("--frieze", frieze_path, "frieze JSON file");
  render_cmd->add_option("--format", format_arg, "svg, tikz or text");
  render_cmd->add_option("--geometry", geometry_arg, "line or disc");
  render_cmd->add_option("--scale", scale);
  render_cmd->add_flag("--no-labels", no_labels);
  render_cmd->add_option("--out", opt.out_path);

  std::vector<const char*> cargs;
  cargs.push_back("infgon");
  for (const std::string& a : argv) cargs.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return 2;
    }

    if (validate_cmd->parsed()) {
      load_window(opt.window_path);  // validation happens on load
      if (opt.pretty)
        out << "ok\n";
      else
        out << Json{{"ok", true}}.dump() << "\n";
      return 0;
    }

    if (mutate_cmd->parsed()) {
      const TriangulationWindow w = load_window(opt.window_path);
      const TriangulationWindow flipped = flip(w, parse_arc_arg(arc_arg));
      if (opt.pretty)
        write_output(render_window(flipped, RenderSpec{RenderSpec::Format::Text}),
                     opt.out_path, out);
      else
        write_output(window_to_json(flipped).dump(), opt.out_path, out);
      return 0;
    }

    if (sequence_cmd->parsed()) {
      const TriangulationWindow w = load_window(opt.window_path);
      const BinarySeq x = x_sequence(w);
      const GapSeq y = y_sequence(w);
      if (opt.pretty) {
        out << "x = " << x.str() << "\n";
        out << "y =";
        for (std::int64_t v : y.values) out << " " << v;
        out << "\n";
      } else {
        Json j;
        j["x"] = x.str();
        j["y"] = y.values;
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (penrose_cmd->parsed()) {
      encode = penrose_cmd->count("--encode") > 0;
      decode = penrose_cmd->count("--decode") > 0;
      if (encode == decode)
        fail(ErrorCode::ParseError, "penrose needs exactly one of --encode/--decode");
      const BinarySeq input = BinarySeq::from_string(word_arg);
      const BinarySeq result = encode ? penrose_encode(input) : penrose_decode(input);
      if (opt.pretty)
        out << result.str() << "\n";
      else
        out << word_to_json(result).dump() << "\n";
      return 0;
    }

    if (frieze_cmd->parsed()) {
      IntFrieze f = [&] {
        if (!opt.window_path.empty() && !quiddity_arg.empty())
          fail(ErrorCode::ParseError, "give either --window or --quiddity, not both");
        if (!opt.window_path.empty())
          return frieze_from_window(load_window(opt.window_path));
        if (!quiddity_arg.empty())
          return frieze_from_quiddity(parse_quiddity_arg(quiddity_arg),
                                      parse_kind(kind_arg), at);
        fail(ErrorCode::ParseError, "frieze needs --window or --quiddity");
      }();
      if (opt.pretty)
        write_output(heading("frieze (" + std::string(to_string(f.kind())) + ")") +
                         render_frieze(f, RenderSpec{RenderSpec::Format::Text}),
                     opt.out_path, out);
      else
        write_output(frieze_to_json(f).dump(), opt.out_path, out);
      return 0;
    }

    if (cluster_cmd->parsed()) {
      const TriangulationWindow w = load_window(opt.window_path);
      const PolyFrieze f = coefficient_frieze(w);
      if (opt.pretty)
        write_output(heading("cluster frieze") +
                         render_frieze(f, RenderSpec{RenderSpec::Format::Text}),
                     opt.out_path, out);
      else
        write_output(poly_frieze_to_json(f, specialize_ones).dump(), opt.out_path, out);
      return 0;
    }

    if (chi_cmd->parsed()) {
      const TriangulationWindow w = load_window(opt.window_path);
      const CrossingString cs = crossing_string(w, parse_arc_arg(arc_arg));
      const BigInt count = submodule_count(cs);
      if (opt.pretty) {
        out << "arc " << cs.gamma.str() << " crosses";
        for (const Arc& arc : cs.crossed) out << " " << arc.str();
        out << "\ncount = " << count.str() << "\n";
      } else {
        Json j = crossing_string_to_json(cs);
        j["count"] = count.str();
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (module_cmd->parsed()) {
      GradedModuleDesc desc;
      if (!arc_arg.empty() && desc_arg.empty()) {
        desc = arc_to_module(parse_arc_arg(arc_arg));
      } else if (arc_arg.empty() && !desc_arg.empty()) {
        std::vector<std::string> parts;
        std::stringstream in(desc_arg);
        for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
        try {
          if (parts.size() == 2 && parts[0] == "projective")
            desc = GradedModuleDesc::projective(std::stoll(parts[1]));
          else if (parts.size() == 2 && parts[0] == "cy")
            desc = GradedModuleDesc::cy(std::stoll(parts[1]));
          else if (parts.size() == 3 && parts[0] == "ideal")
            desc = GradedModuleDesc::ideal(std::stoll(parts[1]), std::stoll(parts[2]));
          else
            fail(ErrorCode::ParseError, "descriptor: projective,J | ideal,K,J | cy,J",
                 desc_arg);
        } catch (const Error&) {
          throw;
        } catch (const std::exception&) {
          fail(ErrorCode::ParseError, "descriptor: projective,J | ideal,K,J | cy,J",
               desc_arg);
        }
      } else {
        fail(ErrorCode::ParseError, "module needs exactly one of --arc/--desc");
      }
      const Arc arc = module_to_arc(desc);
      const MatrixFactorization mf = matrix_factorization(desc);
      verify_factorization(mf);
      if (opt.pretty) {
        out << arc.str() << " <-> " << desc.str() << "\n";
      } else {
        Json j;
        j["arc"] = arc_to_json(arc);
        j["module"] = module_to_json(desc);
        j["mf"] = factorization_to_json(mf);
        if (desc.variant == ModuleVariant::Ideal)
          j["min_y_degree"] = min_y_degree(desc);
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (render_cmd->parsed()) {
      RenderSpec spec;
      spec.format = parse_format(format_arg);
      spec.geometry = parse_geometry(geometry_arg);
      spec.scale = scale;
      spec.labels = !no_labels;
      if (!opt.window_path.empty() && frieze_path.empty()) {
        write_output(render_window(load_window(opt.window_path), spec), opt.out_path,
                     out);
      } else if (opt.window_path.empty() && !frieze_path.empty()) {
        write_output(render_frieze(frieze_from_json(load_json(frieze_path)), spec),
                     opt.out_path, out);
      } else {
        fail(ErrorCode::ParseError, "render needs exactly one of --window/--frieze");
      }
      return 0;
    }

    err << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    Json j;
    j["code"] = to_string(e.code());
    j["message"] = e.what();
    j["context"] = e.context();
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["code"] = "Internal";
    j["message"] = e.what();
    j["context"] = "";
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace infgon
