#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapspec/error.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/spectra.hpp"
#include "lapspec/treecount.hpp"
#include "lapspec/verify.hpp"

namespace lapspec::cli {

namespace {

using nlohmann::ordered_json;

/// Raised for bad invocations; maps to kUsageError.
class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr const char* kFamilies[] = {"complete", "multipartite", "kxx-minus-matching", "threshold"};

bool is_family_keyword(const std::string& word) { return std::ranges::find(kFamilies, word) != std::end(kFamilies); }

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError(what + " is out of range: '" + text + "'");
  }
}

/// A parsed `<family> <parameter>` pair, kept with its canonical text.
struct Family {
  std::string keyword;
  std::string parameter;

  std::string label() const { return keyword + " " + parameter; }

  Graph graph() const {
    if (keyword == "complete") return complete_graph(parse_count(parameter, "n"));
    if (keyword == "multipartite") return complete_multipartite(PartitionSpec::parse(parameter));
    if (keyword == "kxx-minus-matching") return bipartite_minus_matching(parse_count(parameter, "n"));
    return threshold_graph(ThresholdSequence::parse(parameter));
  }

  Spectrum spectrum() const {
    if (keyword == "complete") return spectrum_complete(parse_count(parameter, "n"));
    if (keyword == "multipartite") return spectrum_multipartite(PartitionSpec::parse(parameter));
    if (keyword == "kxx-minus-matching") return spectrum_bipartite_minus_matching(parse_count(parameter, "n"));
    return spectrum_threshold_hk(ThresholdSequence::parse(parameter));
  }
};

Family parse_family(const std::vector<std::string>& words) {
  if (words.size() != 2 || !is_family_keyword(words[0]))
    throw UsageError(
        "expected a family spec: complete <n> | multipartite <n1,n2,...> | kxx-minus-matching <n> | "
        "threshold <word over {I,D}>");
  return {words[0], words[1]};
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

/// Resolves the single graph source: a family spec, "-" for stdin, or a path.
Graph load_graph(const std::vector<std::string>& source, std::istream& in) {
  if (source.empty()) throw UsageError("no graph input: give a family spec, a file path, or - for standard input");
  if (is_family_keyword(source[0])) return parse_family(source).graph();
  if (source.size() != 1) throw UsageError("exactly one graph input is allowed");
  if (source[0] == "-") return parse_graph(read_all(in));
  std::ifstream file(source[0], std::ios::binary);
  if (!file) throw UsageError("cannot open '" + source[0] + "'");
  try {
    return parse_graph(read_all(file));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail() + " in " + source[0]);
  }
}

IntVector parse_vector(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<BigInt> entries;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const std::size_t digits_from = !token.empty() && token[0] == '-' ? 1 : 0;
    if (token.size() == digits_from ||
        !std::all_of(token.begin() + digits_from, token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError(flag + " entries must be integers, got '" + token + "'");
    entries.emplace_back(token);
  }
  if (entries.size() != n)
    throw UsageError(flag + " has " + std::to_string(entries.size()) + " entries, graph has " + std::to_string(n) +
                     " vertices");
  return IntVector(std::move(entries));
}

struct Format {
  std::string name = "text";
  bool json() const { return name == "json"; }
};

void add_format(CLI::App& cmd, Format& format) {
  cmd.add_option("--format", format.name, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::string edge_list_json(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.order();
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.lo, e.hi});
  return doc.dump() + "\n";
}

std::string cmd_gen(const std::vector<std::string>& family_words, const Format& format) {
  const Graph g = parse_family(family_words).graph();
  return format.json() ? edge_list_json(g) : serialize_graph(g);
}

std::string cmd_charpoly(const std::vector<std::string>& source, std::istream& in, const Format& format,
                         bool pretty) {
  const Graph g = load_graph(source, in);
  const IntPolynomial p = char_poly(laplacian(g));
  if (!format.json()) return (pretty ? p.to_pretty_string() : p.to_ascending_string()) + "\n";
  ordered_json doc;
  doc["n"] = g.order();
  doc["edges"] = g.size();
  doc["coefficients"] = ordered_json::array();
  for (std::size_t k = 0; k <= g.order(); ++k) doc["coefficients"].push_back(p.coefficient(k).str());
  doc["pretty"] = p.to_pretty_string();
  return doc.dump() + "\n";
}

std::string cmd_spectrum(const std::vector<std::string>& source, const Format& format) {
  if (source.empty() || !is_family_keyword(source[0]))
    throw UsageError(
        "spectrum accepts only family specs: general graphs may have irrational Laplacian eigenvalues; "
        "use charpoly for those");
  const Family family = parse_family(source);
  const Spectrum s = family.spectrum();
  if (!format.json()) return s.to_string() + "\n";
  ordered_json doc;
  doc["family"] = family.label();
  doc["n"] = s.size();
  doc["spectrum"] = ordered_json::array();
  for (const auto& [value, count] : s.entries()) doc["spectrum"].push_back({{"value", value.str()}, {"multiplicity", count}});
  doc["text"] = s.to_string();
  return doc.dump() + "\n";
}

struct TauOptions {
  std::string method = "all";
  std::string u;
  std::string v;
  std::size_t row = 1;
  std::size_t col = 1;
  bool row_given = false;
  bool col_given = false;
};

std::string cmd_tau(const std::vector<std::string>& source, std::istream& in, const TauOptions& opts,
                    const Format& format, int& status) {
  const Graph g = load_graph(source, in);
  const std::size_t n = g.order();
  const bool vectors_given = !opts.u.empty() || !opts.v.empty();
  if (vectors_given && opts.method != "rankone") throw UsageError("--u/--v apply only to --method rankone");
  if ((opts.row_given || opts.col_given) && opts.method != "cofactor")
    throw UsageError("--row/--col apply only to --method cofactor");

  if (opts.method == "all") {
    const TreeCountReport report = compare_methods(g);
    status = report.agreement ? kSuccess : kVerificationFailure;
    if (format.json()) {
      ordered_json doc;
      doc["n"] = report.n;
      doc["edges"] = report.edges;
      ordered_json methods = ordered_json::object();
      for (const auto& r : report.methods) methods[r.method] = r.count ? ordered_json(r.count->str()) : ordered_json();
      doc["methods"] = methods;
      doc["agreement"] = report.agreement;
      return doc.dump() + "\n";
    }
    std::ostringstream text;
    const auto line = [&](const std::string& key, const std::string& value) {
      text << std::left << std::setw(12) << key << value << "\n";
    };
    line("n", std::to_string(report.n));
    line("edges", std::to_string(report.edges));
    for (const auto& r : report.methods) line(r.method, r.count ? r.count->str() : "skipped: " + r.skipped_reason);
    line("agreement", report.agreement ? "true" : "false");
    return text.str();
  }

  BigInt count;
  if (opts.method == "cofactor") {
    count = n == 1 && opts.row == 1 && opts.col == 1 ? BigInt(1) : tau_cofactor(g, opts.row, opts.col);
  } else if (opts.method == "rankone") {
    const IntVector u = opts.u.empty() ? IntVector::ones(n) : parse_vector(opts.u, n, "--u");
    const IntVector v = opts.v.empty() ? IntVector::ones(n) : parse_vector(opts.v, n, "--v");
    count = tau_rank_one(g, u, v);
  } else if (opts.method == "charpoly") {
    count = tau_charpoly(g);
  } else {
    count = tau_bruteforce(g);
  }
  if (!format.json()) return count.str() + "\n";
  ordered_json doc;
  doc["n"] = n;
  doc["edges"] = g.size();
  doc["method"] = opts.method;
  doc["count"] = count.str();
  return doc.dump() + "\n";
}

std::string cmd_verify(const std::string& scope, std::uint64_t seed, std::size_t trials, const Format& format,
                       int& status) {
  const std::vector<SuiteResult> results = run_verification(scope, seed, trials);
  const bool all_passed = std::ranges::all_of(results, [](const SuiteResult& r) { return r.passed(); });
  status = all_passed ? kSuccess : kVerificationFailure;
  if (format.json()) {
    ordered_json doc;
    doc["scope"] = scope;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["suites"] = ordered_json::array();
    for (const auto& r : results) {
      ordered_json suite;
      suite["name"] = r.name;
      suite["passed"] = r.passed();
      suite["checks"] = r.checks;
      suite["failures"] = r.failures;
      suite["coverage"] = ordered_json::object();
      for (const auto& [key, count] : r.coverage) suite["coverage"][key] = count;
      doc["suites"].push_back(std::move(suite));
    }
    doc["passed"] = all_passed;
    return doc.dump() + "\n";
  }
  std::ostringstream text;
  text << "seed " << seed << "\n";
  text << "trials " << trials << "\n";
  for (const auto& r : results) {
    text << std::left << std::setw(12) << r.name << (r.passed() ? "PASS" : "FAIL") << "  " << r.checks
         << " checks";
    for (const auto& [key, count] : r.coverage) text << "  " << key << "=" << count;
    text << "\n";
    for (const auto& f : r.failures) text << "  counterexample: " << f << "\n";
  }
  text << std::left << std::setw(12) << "result" << (all_passed ? "PASS" : "FAIL") << "\n";
  return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Laplacian characteristic polynomials, family spectra and spanning-tree counts", "lapspec"};
  app.require_subcommand(1);

  std::string output_path;
  Format format;

  auto* gen = app.add_subcommand("gen", "Write the edge list of a graph family");
  std::vector<std::string> gen_family;
  gen->add_option("family", gen_family, "Family spec, e.g. 'complete 5'")->required()->expected(2);
  add_format(*gen, format);
  gen->add_option("-o", output_path, "Write output to this path");

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial det(L - xI), ascending coefficients");
  std::vector<std::string> charpoly_source;
  bool pretty = false;
  charpoly->add_option("input", charpoly_source, "Family spec, edge-list path, or - for standard input")
      ->required()
      ->expected(1, 2);
  charpoly->add_flag("--pretty", pretty, "Print as -2*x + x^2 instead of coefficients");
  add_format(*charpoly, format);
  charpoly->add_option("-o", output_path, "Write output to this path");

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form Laplacian spectrum of a graph family");
  std::vector<std::string> spectrum_source;
  spectrum->add_option("family", spectrum_source, "Family spec")->required()->expected(1, 2);
  add_format(*spectrum, format);
  spectrum->add_option("-o", output_path, "Write output to this path");

  auto* tau = app.add_subcommand("tau", "Count spanning trees");
  std::vector<std::string> tau_source;
  TauOptions tau_opts;
  tau->add_option("input", tau_source, "Family spec, edge-list path, or - for standard input")
      ->required()
      ->expected(1, 2);
  tau->add_option("--method", tau_opts.method, "cofactor | rankone | charpoly | bruteforce | all")
      ->check(CLI::IsMember({"cofactor", "rankone", "charpoly", "bruteforce", "all"}));
  tau->add_option("--u", tau_opts.u, "Comma-separated left vector for rankone (default all ones)");
  tau->add_option("--v", tau_opts.v, "Comma-separated right vector for rankone (default all ones)");
  auto* row_opt = tau->add_option("--row", tau_opts.row, "Deleted row for cofactor (1-based)");
  auto* col_opt = tau->add_option("--col", tau_opts.col, "Deleted column for cofactor (1-based)");
  add_format(*tau, format);
  tau->add_option("-o", output_path, "Write output to this path");

  auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
  std::string scope = "all";
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  verify->add_option("scope", scope, "thm1 | eq1 | eq3 | families | merris-hk | all")
      ->check(CLI::IsMember({"thm1", "eq1", "eq3", "families", "merris-hk", "all"}));
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_option("--trials", trials, "Random trials per randomized suite");
  add_format(*verify, format);
  verify->add_option("-o", output_path, "Write output to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  int status = kSuccess;
  std::string text;
  try {
    if (gen->parsed()) {
      text = cmd_gen(gen_family, format);
    } else if (charpoly->parsed()) {
      text = cmd_charpoly(charpoly_source, in, format, pretty);
    } else if (spectrum->parsed()) {
      text = cmd_spectrum(spectrum_source, format);
    } else if (tau->parsed()) {
      tau_opts.row_given = row_opt->count() > 0;
      tau_opts.col_given = col_opt->count() > 0;
      text = cmd_tau(tau_source, in, tau_opts, format, status);
    } else {
      text = cmd_verify(scope, seed, trials, format, status);
    }
  } catch (const ParseError& e) {
    err << "lapspec: parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "lapspec: " << e.what() << "\n";
    return kUsageError;
  }

  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "lapspec: cannot write '" << output_path << "'\n";
      return kUsageError;
    }
    file << text;
  }
  return status;
}

}  // namespace lapspec::cli
