#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gwps3/cases.hpp"
#include "gwps3/classifier.hpp"
#include "gwps3/errors.hpp"
#include "gwps3/grading.hpp"
#include "gwps3/intersect.hpp"
#include "gwps3/reference_data.hpp"
#include "gwps3/toric.hpp"
#include "gwps3/veronese.hpp"
#include "gwps3/verify.hpp"

namespace {

using namespace gwps3;

enum class Format { Table, Json, Csv };

struct Options {
  std::string data_file;
  bool json = false;
  bool csv = false;

  Format format() const {
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    return Format::Table;
  }
};

const ReferenceData& reference(const Options& opt) {
  static std::optional<ReferenceData> loaded;
  if (!opt.data_file.empty()) {
    if (!loaded) loaded = load_reference_file(opt.data_file);
    return *loaded;
  }
  return builtin_reference_data();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int emit_report(const std::vector<CheckResult>& checks, const Options& opt) {
  VerificationReport rep{checks};
  switch (opt.format()) {
    case Format::Json: std::cout << rep.render_json(); break;
    case Format::Csv: std::cout << rep.render_csv(); break;
    case Format::Table: std::cout << rep.render_table(); break;
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_classify_raw(const Options& opt) {
  const auto raw = enumerate_gorenstein_wps3_raw();
  if (opt.format() == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : raw)
      j.push_back({{"quadruple", e.quadruple},
                   {"weights", e.weights.weights()},
                   {"well_formed", e.well_formed}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (opt.format() == Format::Csv) {
    std::cout << "quadruple,weights,well_formed\n";
    for (const auto& e : raw) {
      std::string q;
      for (std::size_t i = 0; i < 4; ++i)
        q += (i ? "," : "") + std::to_string(e.quadruple[i]);
      std::cout << csv_quote(q) << "," << csv_quote(e.weights.csv()) << ","
                << (e.well_formed ? "true" : "false") << "\n";
    }
    return 0;
  }
  for (const auto& e : raw) {
    std::cout << "1/" << e.quadruple[0] << " + 1/" << e.quadruple[1] << " + 1/"
              << e.quadruple[2] << " + 1/" << e.quadruple[3] << "  ->  "
              << e.weights.label() << (e.well_formed ? "" : "  [not well-formed]")
              << "\n";
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  const auto rows = classification_table(reference(opt));
  if (opt.format() == Format::Table) {
    std::cout << render_classification(rows);
    return 0;
  }
  if (opt.format() == Format::Csv) {
    std::cout << "case,weights,l,sigma,index\n";
    for (const auto& r : rows)
      std::cout << r.case_id << "," << csv_quote(r.weights.csv()) << "," << r.l << ","
                << r.sigma << "," << r.index << "\n";
    return 0;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"case", r.case_id},
                 {"weights", r.weights.weights()},
                 {"l", r.l},
                 {"sigma", r.sigma},
                 {"index", r.index}});
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_invariants(const std::string& weights_csv, const Options& opt) {
  const WeightedSpace w = parse_weights(weights_csv);
  const bool wf = is_well_formed(w);
  nlohmann::json j{{"weights", w.weights()}, {"label", w.label()}, {"well_formed", wf}};
  std::string goren_msg;
  if (w.coord_count() == 4 && wf) {
    try {
      const auto inv = gorenstein_invariants(w);
      j["gorenstein"] = true;
      j["l"] = inv.l;
      j["sigma"] = inv.sigma;
      j["index"] = inv.index;
      j["genus"] = anticanonical_genus(w).get_str();
      goren_msg = "l=" + std::to_string(inv.l) + " sigma=" + std::to_string(inv.sigma) +
                  " i=" + std::to_string(inv.index) +
                  " g=" + anticanonical_genus(w).get_str();
    } catch (const NotGorensteinError& e) {
      j["gorenstein"] = false;
      j["offending_weight"] = e.offending_weight;
      goren_msg = "not Gorenstein: weight " + std::to_string(e.offending_weight) +
                  " does not divide sigma=" + std::to_string(w.weight_sum());
    }
  } else {
    j["gorenstein"] = nullptr;
    goren_msg = "Gorenstein test needs a well-formed 4-weight space";
  }
  switch (opt.format()) {
    case Format::Json: std::cout << j.dump(2) << "\n"; break;
    case Format::Csv:
      std::cout << "weights,well_formed,details\n"
                << csv_quote(w.csv()) << "," << (wf ? "true" : "false") << ","
                << csv_quote(goren_msg) << "\n";
      break;
    case Format::Table:
      std::cout << w.label() << "\n"
                << "well-formed: " << (wf ? "yes" : "no") << "\n"
                << goren_msg << "\n";
      break;
  }
  return 0;
}

int cmd_hilbert(const std::string& weights_csv, std::int64_t d, bool enumerate,
                const Options& opt) {
  const WeightedSpace w = parse_weights(weights_csv);
  const Int count = hilbert_count(w, d);
  std::vector<ExpVec> monomials;
  if (enumerate) monomials = monomials_of_degree(w, d);
  switch (opt.format()) {
    case Format::Json: {
      nlohmann::json j{{"weights", w.weights()}, {"degree", d}, {"count", count.get_str()}};
      if (enumerate) j["monomials"] = monomials;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "weights,degree,count\n"
                << csv_quote(w.csv()) << "," << d << "," << count.get_str() << "\n";
      break;
    case Format::Table:
      std::cout << "h^0(" << w.label() << ", O(" << d << ")) = " << count.get_str() << "\n";
      if (enumerate)
        for (const auto& e : monomials) {
          for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? " " : "") << e[i];
          std::cout << "\n";
        }
      break;
  }
  return 0;
}

nlohmann::json embedding_json(const WeightedSpace& w, const VeroneseEmbedding& emb) {
  std::vector<std::string> src_names = {"x", "y", "z", "w"};
  if (w.coord_count() != 4) {
    src_names.clear();
    for (std::size_t i = 0; i < w.coord_count(); ++i)
      src_names.push_back("x" + std::to_string(i));
  }
  nlohmann::json j;
  j["source"] = w.weights();
  j["n"] = emb.n;
  std::vector<std::int64_t> tw;
  nlohmann::json gens = nlohmann::json::array();
  std::vector<std::string> gen_names;
  for (const auto& g : emb.generators) {
    tw.push_back(g.target_weight);
    gen_names.push_back(g.name);
    gens.push_back({{"name", g.name},
                    {"monomial", monomial_text(g.monomial, src_names)},
                    {"exponents", g.monomial},
                    {"weight", g.target_weight}});
  }
  j["target_weights"] = tw;
  j["generators"] = gens;
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : emb.relations)
    rels.push_back({{"lhs", monomial_text(r.lhs, gen_names)},
                    {"rhs", monomial_text(r.rhs, gen_names)},
                    {"degree", r.degree}});
  j["relations"] = rels;
  j["relations_certified_minimal"] = emb.relations_certified_minimal;
  j["closure_certified"] = emb.closure_certified;
  j["hypersurface"] = emb.generators.size() == w.coord_count() + 1;
  return j;
}

int cmd_veronese(const std::string& weights_csv, std::int64_t n, const Options& opt) {
  const WeightedSpace w = parse_weights(weights_csv);
  const auto emb = veronese_embedding(w, n);
  const auto j = embedding_json(w, emb);
  if (opt.format() == Format::Json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (opt.format() == Format::Csv) {
    std::cout << "kind,name,monomial,weight,degree\n";
    for (const auto& g : j["generators"])
      std::cout << "generator," << csv_quote(g["name"]) << ","
                << csv_quote(g["monomial"]) << "," << g["weight"] << ",\n";
    for (const auto& r : j["relations"])
      std::cout << "relation," << csv_quote(std::string(r["lhs"]) + " = " + std::string(r["rhs"]))
                << ",," << "," << r["degree"] << "\n";
    return 0;
  }
  std::cout << "degree-" << n << " embedding of " << w.label() << "\n";
  std::cout << "target " << WeightedSpace(j["target_weights"].get<std::vector<std::int64_t>>()).label()
            << "\n";
  for (const auto& g : emb.generators) {
    std::vector<std::string> src_names = {"x", "y", "z", "w"};
    if (w.coord_count() != 4) {
      src_names.clear();
      for (std::size_t i = 0; i < w.coord_count(); ++i)
        src_names.push_back("x" + std::to_string(i));
    }
    std::cout << "  " << g.name << " = " << monomial_text(g.monomial, src_names)
              << "  (weight " << g.target_weight << ")\n";
  }
  if (emb.generators.size() == w.coord_count() + 1 && emb.relations.size() == 1) {
    const auto model = embed_as_hypersurface(w, n);
    std::cout << "hypersurface: " << model.degree_label() << " (" << model.relation_text()
              << ")\n";
  } else {
    std::cout << "not a hypersurface: " << emb.generators.size()
              << " generators (codimension " << (emb.generators.size() - w.coord_count())
              << ")\n";
    std::vector<std::string> gen_names;
    for (const auto& g : emb.generators) gen_names.push_back(g.name);
    for (const auto& r : emb.relations)
      std::cout << "  relation: " << monomial_text(r.lhs, gen_names) << " = "
                << monomial_text(r.rhs, gen_names) << "  (degree " << r.degree << ")"
                << (emb.relations_certified_minimal ? "" : "  [not certified minimal]")
                << "\n";
  }
  return 0;
}

int cmd_fan(const std::string& weights_csv, const Options& opt) {
  const WeightedSpace w = parse_weights(weights_csv);
  const Fan fan = wps_fan(w);
  validate_fan(fan);
  if (opt.format() == Format::Json) {
    std::cout << fan_to_json(fan);
    return 0;
  }
  if (opt.format() == Format::Csv) {
    std::cout << "kind,data\n";
    for (const auto& r : fan.rays) std::cout << "ray," << csv_quote(r.to_string()) << "\n";
    for (const auto& c : fan.max_cones) {
      std::string s;
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      std::cout << "cone," << csv_quote(s) << "\n";
    }
    return 0;
  }
  std::cout << "fan of " << w.label() << "\n";
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    std::cout << "  ray " << i << ": " << fan.rays[i].to_string() << "\n";
  for (const auto& c : fan.max_cones) {
    std::cout << "  cone {";
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i];
    std::cout << "}\n";
  }
  return 0;
}

std::vector<std::uint64_t> parse_seeds(const std::string& csv) {
  std::vector<std::uint64_t> seeds;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) seeds.push_back(std::stoull(tok));
  if (seeds.empty()) throw DomainError("empty seed list");
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on Gorenstein weighted projective 3-spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--data", opt.data_file, "alternate reference data file");

  auto add_formats = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "JSON output");
    sub->add_flag("--csv", opt.csv, "CSV output");
  };

  bool classify_raw = false;
  auto* classify = app.add_subcommand("classify", "list the 14 Gorenstein spaces with l, sigma, index");
  classify->add_flag("--raw", classify_raw, "show the pre-filter unit-fraction search results");
  add_formats(classify);

  std::string weights_arg;
  auto* invariants = app.add_subcommand("invariants", "invariants of one weighted space");
  invariants->add_option("weights", weights_arg, "comma-separated weights")->required();
  add_formats(invariants);

  std::int64_t degree_arg = 0;
  bool enumerate_flag = false;
  auto* hilbert = app.add_subcommand("hilbert", "monomial count in a given degree");
  hilbert->add_option("weights", weights_arg, "comma-separated weights")->required();
  hilbert->add_option("degree", degree_arg, "degree")->required();
  hilbert->add_flag("--enumerate", enumerate_flag, "list the monomials");
  add_formats(hilbert);

  std::int64_t n_arg = 1;
  auto* veronese = app.add_subcommand("veronese", "generators and relations of a degree-n embedding");
  veronese->add_option("weights", weights_arg, "comma-separated weights")->required();
  veronese->add_option("--n", n_arg, "Veronese degree")->required();
  add_formats(veronese);

  auto* fan = app.add_subcommand("fan", "fan of a weighted projective 3-space");
  fan->add_option("weights", weights_arg, "comma-separated weights")->required();
  add_formats(fan);

  auto* blowup = app.add_subcommand("blowup-verify", "verify the toric factorization suite");
  add_formats(blowup);

  auto* degrees = app.add_subcommand("degrees", "verify the extension degree and dimension identities");
  add_formats(degrees);

  std::string seeds_arg = "1,2,3";
  auto* profiles = app.add_subcommand("profiles", "verify the curve-section multiplicity profiles");
  profiles->add_option("--seeds", seeds_arg, "comma-separated seeds (default 1,2,3)");
  add_formats(profiles);

  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_flag("--all", verify_all, "run every check");
  verify->add_option("--seeds", seeds_arg, "comma-separated seeds (default 1,2,3)");
  add_formats(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return classify_raw ? cmd_classify_raw(opt) : cmd_classify(opt);
    if (invariants->parsed()) return cmd_invariants(weights_arg, opt);
    if (hilbert->parsed()) return cmd_hilbert(weights_arg, degree_arg, enumerate_flag, opt);
    if (veronese->parsed()) return cmd_veronese(weights_arg, n_arg, opt);
    if (fan->parsed()) return cmd_fan(weights_arg, opt);
    if (blowup->parsed()) return emit_report(gwps3::toric_checks(), opt);
    if (degrees->parsed()) return emit_report(gwps3::degree_checks(reference(opt)), opt);
    if (profiles->parsed()) {
      VerifyOptions vo{parse_seeds(seeds_arg)};
      return emit_report(gwps3::profile_checks(reference(opt), vo), opt);
    }
    if (verify->parsed()) {
      if (!verify_all) {
        std::cerr << "verify requires --all\n";
        return 2;
      }
      VerifyOptions vo{parse_seeds(seeds_arg)};
      const auto rep = verification_report(reference(opt), vo);
      switch (opt.format()) {
        case Format::Json: std::cout << rep.render_json(); break;
        case Format::Csv: std::cout << rep.render_csv(); break;
        case Format::Table: std::cout << rep.render_table(); break;
      }
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const gwps3::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
