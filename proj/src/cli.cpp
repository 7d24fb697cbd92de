#include "qpd/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpd/enumerate.hpp"
#include "qpd/error.hpp"
#include "qpd/io.hpp"
#include "qpd/lattice.hpp"
#include "qpd/transform.hpp"
#include "qpd/verify.hpp"

namespace qpd {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DiagramDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Diagram beta(const Diagram& q, int variant) {
  return variant == 1 ? beta1(q).diagram : beta2(q).diagram;
}

std::string canonical_text(const Diagram& d) {
  return serialize(to_document(canonical_relabel(d)));
}

std::string perm_name(const CanonicalPermutation& p) {
  std::string s = "perm:";
  for (std::size_t i = 0; i < p.perm.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.perm[i]);
  }
  return s;
}

void require_size(int n, int minimum) {
  if (n < minimum) {
    throw UsageError("--size must be at least " + std::to_string(minimum));
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasiplanar diagrams and slim semimodular lattice diagrams"};
  app.require_subcommand(1);

  std::string file;
  int variant = 2;
  int size = 0;
  std::string out_dir;
  std::string format = "dot";
  bool timing = false;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a diagram document");
  validate_cmd->add_option("FILE", file)->required();
  auto* canon_cmd = app.add_subcommand("canon", "Canonical permutation of a diagram");
  canon_cmd->add_option("FILE", file)->required();
  auto* alpha_cmd = app.add_subcommand("alpha", "Quasiplanar diagram of a lattice diagram");
  alpha_cmd->add_option("FILE", file)->required();
  auto* beta_cmd = app.add_subcommand("beta", "Lattice diagram of a quasiplanar diagram");
  beta_cmd->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));
  beta_cmd->add_option("FILE", file)->required();
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check beta(alpha(D)) or alpha(beta(Q))");
  roundtrip_cmd->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));
  roundtrip_cmd->add_option("FILE", file)->required();
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all n-element quasiplanar diagrams");
  enumerate_cmd->add_option("--size", size)->required();
  enumerate_cmd->add_option("--out", out_dir);
  auto* count_cmd = app.add_subcommand("count", "Count n-element quasiplanar diagrams");
  count_cmd->add_option("--size", size)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suite at one size");
  verify_cmd->add_option("--size", size)->required();
  verify_cmd->add_flag("--timing", timing, "Include wall time in the report");
  auto* render_cmd = app.add_subcommand("render", "Draw a diagram");
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"dot"}));
  render_cmd->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) {
      const DiagramDocument doc = read_document(file);
      const Diagram d = to_diagram(doc);
      out << serialize(to_document(d, doc.name)) << '\n';
      return kExitOk;
    }
    if (*canon_cmd) {
      const Diagram d = to_diagram(read_document(file));
      ordered_json j;
      j["n"] = d.size();
      j["perm"] = canonical_form(d).perm;
      out << j.dump() << '\n';
      return kExitOk;
    }
    if (*alpha_cmd) {
      const Diagram d = to_diagram(read_document(file));
      out << canonical_text(alpha(d).diagram) << '\n';
      return kExitOk;
    }
    if (*beta_cmd) {
      const Diagram q = to_diagram(read_document(file));
      out << canonical_text(beta(q, variant)) << '\n';
      return kExitOk;
    }
    if (*roundtrip_cmd) {
      const Diagram d = to_diagram(read_document(file));
      ordered_json j;
      std::optional<Diagram> result;
      if (is_slim_semimodular(d)) {
        j["direction"] = "beta_alpha";
        result = beta(alpha(d).diagram, variant);
      } else {
        j["direction"] = "alpha_beta";
        result = alpha(beta(d, variant)).diagram;
      }
      const bool same = similar(*result, d);
      j["similar"] = same;
      j["result"] = to_json(to_document(canonical_relabel(*result)));
      out << j.dump() << '\n';
      return same ? kExitOk : kExitPropertyFailure;
    }
    if (*enumerate_cmd) {
      require_size(size, 2);
      ordered_json listing = ordered_json::array();
      std::uint64_t index = 0;
      for_each_canonical_permutation(size, [&](const CanonicalPermutation& p) {
        const DiagramDocument doc = to_document(from_canonical(p), perm_name(p));
        if (out_dir.empty()) {
          listing.push_back(to_json(doc));
        } else {
          std::filesystem::create_directories(out_dir);
          const std::string name = "q" + std::to_string(size) + "_" +
                                   std::to_string(index) + ".json";
          std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
          if (!f) throw InputError("cannot write " + name);
          f << serialize(doc) << '\n';
          listing.push_back(name);
        }
        ++index;
      });
      if (out_dir.empty()) {
        out << listing.dump() << '\n';
      } else {
        ordered_json j;
        j["size"] = size;
        j["count"] = index;
        j["files"] = listing;
        out << j.dump() << '\n';
      }
      return kExitOk;
    }
    if (*count_cmd) {
      require_size(size, 2);
      ordered_json j;
      const auto count = count_quasiplanar(size);
      const auto expected = factorial(size - 2);
      j["size"] = size;
      j["count"] = count;
      j["expected"] = expected;
      out << j.dump() << '\n';
      return count == expected ? kExitOk : kExitPropertyFailure;
    }
    if (*verify_cmd) {
      require_size(size, 3);
      const EnumerationReport report = verify_suite(size);
      out << report_to_json(report, timing).dump(2) << '\n';
      return report.passed() ? kExitOk : kExitPropertyFailure;
    }
    if (*render_cmd) {
      const Diagram d = to_diagram(read_document(file));
      out << render_dot(d);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DiagramError& e) {
    err << "error: " << e.what();
    if (!e.location().empty()) err << " (at " << e.location() << ")";
    err << '\n';
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace qpd
