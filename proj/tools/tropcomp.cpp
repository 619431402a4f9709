// Command-line front end for the tropcomp library.
//
// Exit codes: 0 yes/success, 1 no, 2 usage or input errors, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropcomp.hpp"

namespace {

using namespace tropcomp;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr int kResource = 3;

/// Input error tagged with the file it came from.
struct FileError {
  std::string path;
  ParseError error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Parse>
auto parse_file(const std::string& path, Parse&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw FileError{path, e};
  }
}

std::vector<TropicalPolynomial> load_system(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return io::parse_system(t); });
}

TropicalMatrix load_matrix(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return io::parse_matrix(t); });
}

CnfFormula load_cnf(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return io::parse_dimacs(t); });
}

Point load_point(const std::string& text, std::size_t n) {
  Point x;
  try {
    x = io::parse_point(text);
  } catch (const ParseError& e) {
    throw FileError{"<point>", e};
  }
  if (x.size() != n) {
    throw InvalidArgument("point has " + std::to_string(x.size()) + " coordinates, system has " +
                          std::to_string(n));
  }
  return x;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string exponent_text(const Exponent& e) {
  std::string s = "(";
  for (std::size_t j = 0; j < e.size(); ++j) s += (j ? "," : "") + std::to_string(e[j]);
  return s + ")";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write `" + path + "`");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical polynomial and prevariety toolkit over exact rationals"};
  app.require_subcommand(1);
  std::size_t cap = EnumerationOptions{}.cap;
  app.add_option("--cap", cap, "Cell-enumeration cap (feasibility checks)")
      ->check(CLI::PositiveNumber);

  std::string input, point_text, output, variant_text = "intersection", viewport_text;
  int code = kYes;
  auto opts = [&] { return EnumerationOptions{cap}; };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate each polynomial at a point");
  eval_cmd->add_option("system", input, "Polynomial system file")->required();
  eval_cmd->add_option("-x,--point", point_text, "Point, e.g. 1/2,0,-3")->required();
  eval_cmd->callback([&] {
    auto fs = load_system(input);
    auto x = load_point(point_text, fs.front().dimension());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto r = eval(fs[i], x);
      std::cout << "f" << (i + 1) << ": value " << r.value.get_str() << " argmin";
      for (const auto& e : r.argmin) std::cout << ' ' << exponent_text(e);
      std::cout << '\n';
    }
  });

  auto* member_cmd = app.add_subcommand("member", "Is the point on every hypersurface?");
  member_cmd->add_option("system", input, "Polynomial system file")->required();
  member_cmd->add_option("-x,--point", point_text, "Point, e.g. 1/2,0,-3")->required();
  member_cmd->callback([&] {
    auto fs = load_system(input);
    auto x = load_point(point_text, fs.front().dimension());
    const bool m = is_member(std::span<const TropicalPolynomial>(fs), x);
    std::cout << "member: " << yes_no(m) << '\n';
    code = m ? kYes : kNo;
  });

  auto* det_cmd = app.add_subcommand("det", "Tropical determinant of a square matrix");
  det_cmd->add_option("matrix", input, "Matrix file")->required();
  det_cmd->callback([&] {
    auto a = load_matrix(input);
    auto r = min_cost_assignment(a);
    std::cout << "det: " << r.value.str() << '\n';
    if (!r.perm.empty()) {
      std::cout << "permutation:";
      for (auto j : r.perm) std::cout << ' ' << (j + 1);
      std::cout << '\n';
    }
  });

  auto* singular_cmd = app.add_subcommand("singular", "Is the matrix tropically singular?");
  singular_cmd->add_option("matrix", input, "Matrix file")->required();
  singular_cmd->callback([&] {
    const bool s = is_singular(load_matrix(input));
    std::cout << "singular: " << yes_no(s) << '\n';
    code = s ? kYes : kNo;
  });

  auto* cons_cmd = app.add_subcommand(
      "consistency-linear", "Do m linear polynomials cut out a codimension-m linear variety?");
  cons_cmd->add_option("system", input, "Linear polynomial system file")->required();
  cons_cmd->callback([&] {
    auto fs = load_system(input);
    const bool c = m_consistency_linear(fs, fs.front().dimension(), opts());
    std::cout << "consistent: " << yes_no(c) << '\n';
    code = c ? kYes : kNo;
  });

  auto* inter_cmd = app.add_subcommand("intersect", "Is the prevariety nonempty?");
  inter_cmd->add_option("system", input, "Polynomial system file")->required();
  inter_cmd->callback([&] {
    auto fs = load_system(input);
    auto r = intersect_nonempty(fs, fs.front().dimension(), opts());
    std::cout << "nonempty: " << yes_no(r.nonempty) << '\n';
    if (r.witness) std::cout << "witness: " << format_point(*r.witness) << '\n';
    code = r.nonempty ? kYes : kNo;
  });

  auto* comp_cmd = app.add_subcommand("components", "Number of connected components");
  comp_cmd->add_option("system", input, "Polynomial system file")->required();
  comp_cmd->callback([&] {
    auto fs = load_system(input);
    std::cout << "components: " << connected_components(fs, fs.front().dimension(), opts())
              << '\n';
  });

  auto* conn_cmd = app.add_subcommand("connected", "Is the (nonempty) prevariety connected?");
  conn_cmd->add_option("system", input, "Polynomial system file")->required();
  conn_cmd->callback([&] {
    auto fs = load_system(input);
    const bool c = is_connected(fs, fs.front().dimension(), opts());
    std::cout << "connected: " << yes_no(c) << '\n';
    code = c ? kYes : kNo;
  });

  auto* dim_cmd = app.add_subcommand("dimension", "Dimension of the prevariety (-1 if empty)");
  dim_cmd->add_option("system", input, "Polynomial system file")->required();
  dim_cmd->callback([&] {
    auto fs = load_system(input);
    std::cout << "dimension: " << prevariety_dimension(fs, fs.front().dimension(), opts())
              << '\n';
  });

  auto* analyze_cmd = app.add_subcommand("analyze", "Full topology report");
  analyze_cmd->add_option("system", input, "Polynomial system file")->required();
  analyze_cmd->callback([&] {
    auto fs = load_system(input);
    auto r = analyze(fs, fs.front().dimension(), opts());
    std::cout << r;
    code = r.nonempty ? kYes : kNo;
  });

  auto* enc_cmd = app.add_subcommand("encode", "Encode a DIMACS CNF as a polynomial system");
  enc_cmd->add_option("cnf", input, "DIMACS file")->required();
  enc_cmd->add_option("--variant", variant_text, "intersection | consistency | connectivity")
      ->check(CLI::IsMember({"intersection", "consistency", "connectivity"}));
  enc_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  enc_cmd->callback([&] {
    auto enc = encode(load_cnf(input), *parse_variant(variant_text));
    std::ostringstream os;
    io::write_encoding(os, enc);
    write_output(output, os.str());
  });

  auto* count_cmd = app.add_subcommand("count-sat", "Count satisfying assignments by brute force");
  count_cmd->add_option("cnf", input, "DIMACS file")->required();
  count_cmd->callback([&] {
    const auto k = brute_force_count(load_cnf(input));
    std::cout << "count: " << k << '\n';
  });

  auto* plot_cmd = app.add_subcommand("plot", "SVG of a plane curve and its dual subdivision");
  plot_cmd->add_option("system", input, "File with one bivariate polynomial")->required();
  plot_cmd->add_option("--viewport", viewport_text, "xmin,xmax,ymin,ymax (default -5,5,-5,5)");
  plot_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  plot_cmd->callback([&] {
    auto fs = load_system(input);
    if (fs.size() != 1) throw InvalidArgument("plot expects exactly one polynomial");
    Viewport vp;
    if (!viewport_text.empty()) {
      auto v = parse_viewport(viewport_text);
      if (!v) throw InvalidArgument("malformed viewport `" + viewport_text + "`");
      vp = *v;
    }
    write_output(output, plot_curve(fs.front(), vp, opts()));
  });

  auto* sub_cmd = app.add_subcommand("subdivision", "Dual regular subdivision as JSON");
  sub_cmd->add_option("system", input, "File with one bivariate polynomial")->required();
  sub_cmd->callback([&] {
    auto fs = load_system(input);
    if (fs.size() != 1) throw InvalidArgument("subdivision expects exactly one polynomial");
    const auto& f = fs.front();
    nlohmann::ordered_json doc;
    doc["points"] = nlohmann::json::array();
    for (const auto& t : f.terms()) {
      doc["points"].push_back({{"exponent", t.exponent}, {"height", t.coefficient.get_str()}});
    }
    doc["faces"] = nlohmann::json::array();
    for (const auto& face : regular_subdivision_2d(f, opts())) {
      doc["faces"].push_back({{"vertices", face.tight_set}, {"dimension", face.dimension}});
    }
    std::cout << doc.dump(2) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kError;
  } catch (const FileError& e) {
    std::cerr << e.path << ':' << e.error.what() << '\n';
    return kError;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const EmptyPrevariety& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}
