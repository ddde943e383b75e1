// Command-line front end for the pencil closure library.
//
// Exit codes: 0 relation holds / checks pass, 3 relation fails,
// 2 usage, parse or domain error, 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencil/closure.hpp"
#include "pencil/errors.hpp"
#include "pencil/hierarchy.hpp"
#include "pencil/matrix.hpp"
#include "pencil/realize.hpp"
#include "pencil/structure.hpp"
#include "pencil/verify.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kUsage = 2;
constexpr int kNo = 3;
constexpr int kVerifyFailed = 4;

struct Options {
  std::string format = "dot";
  std::string out;
  std::uint64_t seed = 1;
  int k = 10;
  int dmax = 0;
  int cap = 3;
};

// A readable file is taken for its contents, anything else is inline text.
std::string load(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

pencil::PencilStructure structure_arg(const std::string& arg) {
  return pencil::parse_structure(load(arg));
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw pencil::DomainError("cannot write " + opt.out);
  file << text;
}

std::string yes_no(bool ok) { return ok ? "holds" : "fails"; }

int check_orbit(const std::string& l_arg, const std::string& m_arg) {
  const auto l = structure_arg(l_arg);
  const auto m = structure_arg(m_arg);
  const pencil::OrbitCheck c = pencil::check_orbit(l, m);
  std::cout << "L: " << pencil::serialize(l) << "\n";
  std::cout << "M: " << pencil::serialize(m) << "\n";
  std::cout << "h = " << c.h << "\n";
  std::cout << "(i) right minimal indices: " << yes_no(c.right_ok) << "\n";
  std::cout << "(ii) left minimal indices: " << yes_no(c.left_ok) << "\n";
  std::cout << "(iii) eigenvalues: " << yes_no(c.eigen_ok);
  if (!c.failing.empty()) {
    std::cout << " at";
    for (const auto& mu : c.failing) std::cout << " " << mu.to_string();
  } else if (!c.eigen_ok) {
    std::cout << " (h < 0)";
  }
  std::cout << "\n";
  std::cout << "VERDICT: " << (c.contained() ? "YES" : "NO") << "\n";
  return c.contained() ? kYes : kNo;
}

int check_bundle(const std::string& l_arg, const std::string& m_arg) {
  const auto l = structure_arg(l_arg);
  const auto m = structure_arg(m_arg);
  const pencil::BundleCheck c = pencil::check_bundle(l, m);
  std::cout << "L: " << pencil::serialize(l) << "\n";
  std::cout << "M: " << pencil::serialize(m) << "\n";
  std::cout << "h = " << (pencil::rank(l) - pencil::rank(m)) << "\n";
  if (c.witness) std::cout << "witness: " << pencil::format_assignment(*c.witness) << "\n";
  std::cout << "VERDICT: " << (c.contained ? "YES" : "NO") << "\n";
  return c.contained ? kYes : kNo;
}

int coalesce(const std::string& l_arg, const std::string& a_arg) {
  const auto l = structure_arg(l_arg);
  const auto a = pencil::complete_with_identity(l, pencil::parse_assignment(load(a_arg)));
  std::cout << pencil::serialize(pencil::coalesce(l, a)) << "\n";
  return kYes;
}

std::string hierarchy_text(const pencil::HierarchyGraph& g) {
  std::ostringstream out;
  for (const auto& node : g.nodes)
    out << node.id << "  " << pencil::serialize(node.signature) << "  c_jor=" << node.c_jor << "\n";
  for (const auto& [from, to] : g.edges) out << g.nodes[from].id << " -> " << g.nodes[to].id << "\n";
  return out.str();
}

int hierarchy(int m, int n, const Options& opt) {
  if (m < 0 || n < 0) throw pencil::DomainError("sizes must be non-negative");
  if (std::min(m, n) > opt.cap)
    throw pencil::DomainError("min(m,n) = " + std::to_string(std::min(m, n)) + " exceeds the cap " +
                              std::to_string(opt.cap));
  const pencil::HierarchyGraph g = pencil::hasse(m, n);
  std::string text;
  if (opt.format == "dot") text = pencil::export_dot(g);
  else if (opt.format == "json") text = pencil::export_json(g);
  else text = hierarchy_text(g);
  emit(opt, text);
  auto& counts = opt.out.empty() ? std::cerr : std::cout;
  counts << "nodes: " << g.nodes.size() << " edges: " << g.edges.size() << "\n";
  return kYes;
}

int verify(const std::string& suite, const Options& opt) {
  std::optional<int> dmax;
  if (opt.dmax > 0) dmax = opt.dmax;
  const pencil::SuiteResult r = pencil::run_suite(suite, opt.seed, dmax);
  std::cout << "suite " << r.name << " (seed " << opt.seed << "): " << r.instances << " instances, "
            << r.checks << " checks, " << r.failures.size() << " failures\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "  FAIL " << r.failures[i] << "\n";
  std::cout << "VERDICT: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return r.passed() ? kYes : kVerifyFailed;
}

std::vector<pencil::Eigenvalue> parse_group(std::string text) {
  if (!text.empty() && text.front() == '{') text.erase(0, 1);
  if (!text.empty() && text.back() == '}') text.pop_back();
  std::vector<pencil::Eigenvalue> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw pencil::ParseError(start, "empty group member");
    out.push_back(pencil::parse_eigenvalue(item.substr(first, last - first + 1), start + first));
    start = comma + 1;
  }
  return out;
}

int witness(const std::string& l_arg, const std::string& group_arg, const std::string& target_arg,
            const Options& opt) {
  const auto l = structure_arg(l_arg);
  const auto group = parse_group(group_arg);
  const auto target = pencil::parse_eigenvalue(target_arg);
  const pencil::WitnessSequence w = pencil::witness_sequence(l, group, target, opt.k);
  std::optional<int> dmax;
  if (opt.dmax > 0) dmax = opt.dmax;

  std::ostringstream out;
  out << "L: " << pencil::serialize(l) << "\n";
  out << "k = " << opt.k << "\n";
  out << "L_k.A =\n" << pencil::to_text(w.term.a()) << "\n";
  out << "L_k.B =\n" << pencil::to_text(w.term.b()) << "\n";
  out << "limit.A =\n" << pencil::to_text(w.limit.a()) << "\n";
  out << "limit.B =\n" << pencil::to_text(w.limit.b()) << "\n";
  for (std::size_t i = 0; i < w.order.size(); ++i)
    out << "W(L_k, " << w.displaced[i].to_string() << ") = "
        << pencil::extract_weyr(w.term, w.displaced[i], dmax).to_string() << "  [from "
        << w.order[i].to_string() << "]\n";
  out << "W(limit, " << target.to_string() << ") = "
      << pencil::extract_weyr(w.limit, target, dmax).to_string() << "\n";
  emit(opt, out.str());
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closure inclusion for orbits and bundles of matrix pencils"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Hierarchy output format")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  app.add_option("--out", opt.out, "Write the graph or witness dump to this file");
  app.add_option("--seed", opt.seed, "Seed for randomized verification suites");
  app.add_option("--k", opt.k, "Index of the witness sequence term")->check(CLI::PositiveNumber);
  app.add_option("--dmax", opt.dmax, "Depth bound for Weyr extraction")->check(CLI::PositiveNumber);
  app.add_option("--cap", opt.cap, "Largest min(m,n) accepted by hierarchy");

  std::string first;
  std::string second;
  std::string third;
  int rows = 0;
  int cols = 0;

  auto* orbit_cmd = app.add_subcommand("check-orbit", "Is M in the orbit closure of L?");
  orbit_cmd->add_option("L", first)->required();
  orbit_cmd->add_option("M", second)->required();

  auto* bundle_cmd = app.add_subcommand("check-bundle", "Is the bundle closure of M inside that of L?");
  bundle_cmd->add_option("L", first)->required();
  bundle_cmd->add_option("M", second)->required();

  auto* coalesce_cmd = app.add_subcommand("coalesce", "Merge eigenvalues of L along an assignment");
  coalesce_cmd->add_option("L", first)->required();
  coalesce_cmd->add_option("assignment", second, "e.g. \"{0,2}->1; {3}->fresh\"")->required();

  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Bundle closure hierarchy of m x n pencils");
  hierarchy_cmd->add_option("m", rows)->required();
  hierarchy_cmd->add_option("n", cols)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a self-check suite");
  verify_cmd->add_option("suite", first)->required();

  auto* witness_cmd = app.add_subcommand("witness", "Sequence in the bundle of L coalescing a group");
  witness_cmd->add_option("L", first)->required();
  witness_cmd->add_option("group", second, "e.g. \"3,2\"")->required();
  witness_cmd->add_option("target", third)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*orbit_cmd) return check_orbit(first, second);
    if (*bundle_cmd) return check_bundle(first, second);
    if (*coalesce_cmd) return coalesce(first, second);
    if (*hierarchy_cmd) return hierarchy(rows, cols, opt);
    if (*verify_cmd) return verify(first, opt);
    if (*witness_cmd) return witness(first, second, third, opt);
  } catch (const pencil::ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
