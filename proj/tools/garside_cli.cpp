// Command-line surface over the library: normal forms, lattice operations,
// ribbon data, conjugacy graphs, periodicity checks, classification tables,
// restriction of scalars and factorization-poset evidence.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/conjcat.hpp"
#include "garside/periodic.hpp"
#include "garside/verify.hpp"

using namespace garside;
namespace br = garside::braid;
namespace cc = garside::conjcat;
namespace pd = garside::periodic;
namespace vf = garside::verify;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string display(const BraidElement& b) {
  if (br::is_identity(b)) return ".";
  std::string out;
  for (std::size_t i = 0; i < b.factors.size(); ++i) {
    if (i) out += " . ";
    out += b.sys->word_string(b.sys->canonical_word(b.factors[i]));
  }
  return out;
}

Subset parse_subset(const CoxeterSystem& sys, const std::string& text) {
  Subset I = 0;
  if (text.empty() || text == ".") return I;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int node = std::stoi(item);
    if (node < 1 || node > sys.rank())
      throw std::invalid_argument("subset node out of range: " + item);
    I |= 1u << (node - 1);
  }
  return I;
}

ordered_json subset_json(Subset I) {
  ordered_json a = ordered_json::array();
  for (int s : subset_to_list(I)) a.push_back(s + 1);
  return a;
}

// The Garside automorphism: conjugation by the lift of w0, composed with
// the diagram twist when the system has one.
cc::Automorphism garside_auto(const CoxeterSystem& sys) {
  cc::Automorphism a;
  a.delta = 1;
  a.phi = 1 % sys.twist_order();
  return a;
}

struct Output {
  std::string path;  // empty or "-" means stdout
  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
    } else {
      std::ofstream f(path, std::ios::binary);
      f << text;
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside-theoretic computations in finite Coxeter groups"};
  app.require_subcommand(1);

  std::string type, word, word2, subset_text, side, fixed, twist;
  std::string dot_path;
  Output out;
  int d = 0, phi_exp = 1, power = 1, bound = 12, n_blocks = 1, reps = 3;
  std::size_t max_nodes = 100000;
  double tolerance = 1e-8;
  bool count_only = false, allow_huge = false, central = false;

  int threads = 1;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", out.path, "output path ('-' for stdout)");
    c->add_option("--threads", threads, "worker thread count");
  };

  auto* c_normal = app.add_subcommand("normal", "greedy normal form");
  c_normal->add_option("type", type)->required();
  c_normal->add_option("word", word)->required();
  add_common(c_normal);

  auto* c_gcd = app.add_subcommand("gcd", "gcd of two positive braids");
  c_gcd->add_option("type", type)->required();
  c_gcd->add_option("word", word)->required();
  c_gcd->add_option("word2", word2)->required();
  c_gcd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  add_common(c_gcd);

  auto* c_lcm = app.add_subcommand("lcm", "lcm of two positive braids");
  c_lcm->add_option("type", type)->required();
  c_lcm->add_option("word", word)->required();
  c_lcm->add_option("word2", word2)->required();
  c_lcm->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  add_common(c_lcm);

  auto* c_div = app.add_subcommand("divides", "divisibility of braids");
  c_div->add_option("type", type)->required();
  c_div->add_option("word", word)->required();
  c_div->add_option("word2", word2)->required();
  c_div->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  add_common(c_div);

  auto* c_alpha = app.add_subcommand("ribbon-alpha", "parabolic head/tail");
  c_alpha->add_option("type", type)->required();
  c_alpha->add_option("word", word)->required();
  c_alpha->add_option("--subset", subset_text)->required();
  add_common(c_alpha);

  auto* c_atoms = app.add_subcommand("ribbon-atoms", "category atoms at I");
  c_atoms->add_option("type", type)->required();
  c_atoms->add_option("--subset", subset_text);
  add_common(c_atoms);

  auto* c_graph = app.add_subcommand("conj-graph", "cyclic conjugacy component");
  c_graph->add_option("type", type)->required();
  c_graph->add_option("word", word)->required();
  c_graph->add_option("--subset", subset_text);
  c_graph->add_option("--fixed", fixed)->check(CLI::IsMember({"phi"}));
  c_graph->add_option("--twist", twist)->check(CLI::IsMember({"phi"}));
  c_graph->add_option("--max-nodes", max_nodes);
  c_graph->add_option("--dot", dot_path, "DOT output path ('-' for stdout)");
  add_common(c_graph);

  auto* c_endo = app.add_subcommand("endo-gens", "endomorphism generators");
  c_endo->add_option("type", type)->required();
  c_endo->add_option("word", word);
  c_endo->add_flag("--central", central, "use pi/pi_I as the braid");
  c_endo->add_option("--subset", subset_text);
  c_endo->add_option("--twist", twist)->check(CLI::IsMember({"phi"}));
  c_endo->add_option("--bound", bound);
  add_common(c_endo);

  auto* c_per = app.add_subcommand("periodic-check", "braid power identity");
  c_per->add_option("type", type)->required();
  c_per->add_option("word", word)->required();
  c_per->add_option("--d", d)->required();
  c_per->add_option("--subset", subset_text);
  c_per->add_option("--phi-exp", phi_exp);
  c_per->add_option("--power", power);
  add_common(c_per);

  auto* c_slide = app.add_subcommand("slide", "slide to power-simple form");
  c_slide->add_option("type", type)->required();
  c_slide->add_option("word", word)->required();
  c_slide->add_option("--d", d)->required();
  c_slide->add_option("--subset", subset_text);
  c_slide->add_option("--phi-exp", phi_exp);
  add_common(c_slide);

  auto* c_good = app.add_subcommand("good", "good roots of pi/pi_I");
  c_good->add_option("type", type)->required();
  c_good->add_option("--d", d)->required();
  c_good->add_option("--word", word, "certify one element instead");
  c_good->add_option("--subset", subset_text);
  c_good->add_option("--phi-exp", phi_exp);
  c_good->add_option("--power", power);
  c_good->add_flag("--count", count_only, "omit representatives");
  c_good->add_flag("--allow-huge", allow_huge);
  c_good->add_option("--reps", reps, "representatives per row");
  c_good->add_option("--tolerance", tolerance);
  add_common(c_good);

  auto* c_restr = app.add_subcommand("restrict", "restriction of scalars");
  c_restr->add_option("type", type)->required();
  c_restr->add_option("--n", n_blocks)->required();
  c_restr->add_option("--d", d)->required();
  add_common(c_restr);

  auto* c_poset = app.add_subcommand("poset-check", "factorization poset");
  c_poset->add_option("type", type)->required();
  c_poset->add_option("word", word)->required();
  c_poset->add_option("--bound", bound);
  add_common(c_poset);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    set_thread_count(threads);
    const auto& W = coxeter(type);
    Subset I = parse_subset(W, subset_text);
    auto parse_braid = [&](const std::string& w) {
      return br::from_word(W, W.parse_word(w));
    };

    if (*c_normal) {
      out.write(display(parse_braid(word)) + "\n");
    } else if (*c_gcd) {
      auto a = parse_braid(word), b = parse_braid(word2);
      out.write(display(side != "right" ? br::left_gcd(a, b)
                                        : br::right_gcd(a, b)) +
                "\n");
    } else if (*c_lcm) {
      auto a = parse_braid(word), b = parse_braid(word2);
      out.write(display(side != "left" ? br::right_lcm(a, b)
                                       : br::left_lcm(a, b)) +
                "\n");
    } else if (*c_div) {
      auto a = parse_braid(word), b = parse_braid(word2);
      out.write(br::divides(a, b, side != "right") ? "true\n" : "false\n");
    } else if (*c_alpha) {
      auto [alpha, omega] = ribbon::alpha_I(I, parse_braid(word));
      out.write(display(alpha) + "\n" + display(omega) + "\n");
    } else if (*c_atoms) {
      std::string text;
      for (const auto& a : ribbon::atoms_from(W, I))
        text += display(a.braid) + " -> " + subset_to_string(a.target) + "\n";
      out.write(text);
    } else if (*c_graph) {
      cc::Automorphism lam =
          twist == "phi" || fixed == "phi" ? garside_auto(W) : cc::Automorphism{};
      auto obj = cc::make_object(I, parse_braid(word), lam);
      std::optional<cc::Automorphism> constraint;
      if (fixed == "phi") constraint = garside_auto(W);
      auto g = cc::explore_component(obj, constraint, max_nodes);
      if (!dot_path.empty()) {
        Output dot_out{dot_path};
        dot_out.write(cc::to_dot(g));
      } else {
        std::string text;
        for (const auto& node : g.nodes) text += cc::flat_word(node.braid) + "\n";
        text += g.complete ? "complete\n" : "truncated\n";
        out.write(text);
      }
    } else if (*c_endo) {
      BraidElement b = central
                           ? br::quotient(br::power(br::lift(W.longest_element(I)), 2),
                                          br::pi(W, (1u << W.rank()) - 1), true)
                           : parse_braid(word);
      cc::Automorphism lam =
          twist == "phi" ? garside_auto(W) : cc::Automorphism{};
      auto obj = cc::make_object(I, b, lam);
      std::string text;
      for (const auto& g : cc::endo_generators(obj, bound))
        text += display(g) + "\n";
      out.write(text);
    } else if (*c_per) {
      bool ok = pd::is_periodic(I, parse_braid(word), d, phi_exp, power);
      out.write(ok ? "true\n" : "false\n");
    } else if (*c_slide) {
      auto [conj, obj] = pd::slide_to_good(I, parse_braid(word), d, phi_exp);
      out.write(display(conj) + "\n" + display(obj.braid) + "\n");
    } else if (*c_good) {
      ordered_json j;
      if (!word.empty()) {
        auto cert = pd::make_certificate(W, d, I, W.from_word(W.parse_word(word)),
                                         phi_exp, power);
        j["type"] = type;
        j["d"] = d;
        j["I"] = subset_json(cert.I);
        j["word"] = word;
        j["length"] = W.length(cert.w);
        j["zeta_rank"] = cert.zeta_rank;
        j["maximal"] = pd::is_maximal(cert);
      } else {
        pd::Limits limits;
        limits.allow_huge = allow_huge;
        limits.representative_limit = reps;
        limits.tol = tolerance;
        auto rows = pd::classify_good(W, d, limits);
        if (rows.empty()) {
          out.write("{\"rows\":[]}\n");
          return 0;
        }
        j["type"] = type;
        j["d"] = d;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
          ordered_json row;
          row["I"] = subset_json(r.I);
          row["length"] = r.length;
          row["count"] = r.count;
          if (!count_only) row["representatives"] = r.representatives;
          if (r.relative_order) row["relative_order"] = *r.relative_order;
          j["rows"].push_back(row);
        }
      }
      out.write(j.dump() + "\n");
    } else if (*c_restr) {
      auto block = pd::restriction_of_scalars(W, n_blocks, d);
      ordered_json j;
      j["type"] = type;
      j["n"] = block.n;
      j["d"] = block.d;
      j["k"] = block.k;
      j["m"] = block.m;
      j["base_d"] = block.base.d;
      j["blocks"] = ordered_json::array();
      for (int i = 0; i < block.n; ++i) {
        ordered_json b;
        b["w"] = W.word_string(W.canonical_word(block.w[i]));
        b["I"] = subset_json(block.I[i]);
        j["blocks"].push_back(b);
      }
      j["verified"] = block.verified;
      out.write(j.dump() + "\n");
    } else if (*c_poset) {
      auto p = vf::decomposition_poset(parse_braid(word), bound);
      auto ev = vf::check_simply_connected_evidence(p);
      ordered_json j;
      j["elements"] = p.elements.size();
      j["covers"] = p.covers.size();
      j["connected"] = ev.connected;
      j["h1_rank"] = ev.h1_rank;
      out.write(j.dump() + "\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
