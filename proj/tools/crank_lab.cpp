#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cranklab/io.hpp"

using namespace cranklab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCap = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

SbMatrix load_matrix(const std::string& text) {
  // JSON object or the plain text format.
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{')
    return matrix_from_json(load_json(text));
  return parse_matrix_text(text);
}

Poset load_poset(const std::string& text) {
  return poset_from_json(load_json(text));
}

json labels_of(const Poset& p, const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (std::size_t i : ids) out.push_back(p.label(i));
  return out;
}

json witness_to_json(const Witness& w, const std::vector<std::string>& row_l,
                     const std::vector<std::string>& col_l) {
  json rows = json::array(), cols = json::array(), pairs = json::array();
  for (std::size_t i : w.row_ids) rows.push_back(row_l[i]);
  for (std::size_t i : w.col_ids) cols.push_back(col_l[i]);
  for (auto& [r, c] : w.pairs())
    pairs.push_back(json::array({row_l[r], col_l[c]}));
  return json{{"rows", rows}, {"cols", cols}, {"triangular_pairs", pairs}};
}

std::vector<std::size_t> parse_elements(const Poset& p,
                                        const std::string& csv) {
  std::vector<std::size_t> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(element_index(p.labels(), json(tok.substr(b, e - b + 1))));
  }
  return out;
}

json set_to_json(const HeredCollection& h, std::uint64_t mask) {
  json out = json::array();
  for (std::size_t i = 0; i < h.ground.size(); ++i)
    if (mask & (1ull << i)) out.push_back(h.ground[i]);
  return out;
}

void emit(const json& report, const std::string& format) {
  if (format == "text") {
    for (auto& [k, v] : report.items())
      std::cout << k << ": " << v.dump() << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superboolean matrix rank and c-rank analysis of finite "
               "posets and lattices"};
  app.require_subcommand(1);

  std::string input, format = "json", kind = "poset";
  app.add_option("-i,--input", input, "input file")->required();
  app.add_option("-f,--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  auto* cmd_validate = app.add_subcommand("validate", "validate an input file");
  cmd_validate->add_option("-k,--kind", kind, "input kind")
      ->check(CLI::IsMember({"matrix", "poset", "lattice", "hered"}));
  auto* cmd_rank = app.add_subcommand("rank", "superboolean matrix rank");
  auto* cmd_crank = app.add_subcommand("crank", "c-rank of a poset");
  bool show_matrices = false;
  cmd_crank->add_flag("--show-matrices", show_matrices,
                      "include the structure matrix and its complement");
  auto* cmd_height = app.add_subcommand("height", "poset height");
  auto* cmd_complete = app.add_subcommand("complete", "lattice completions");
  bool do_dm = false, do_uc = false;
  cmd_complete->add_flag("--dm", do_dm, "Dedekind-MacNeille completion");
  cmd_complete->add_flag("--uc", do_uc, "union closure");
  auto* cmd_chains = app.add_subcommand("chains", "maximal chains");
  auto* cmd_partitions =
      app.add_subcommand("partitions", "chain partitions and bases");
  int chain_index = -1;
  cmd_partitions->add_option("--chain", chain_index,
                             "restrict to one chain by index");
  auto* cmd_independent =
      app.add_subcommand("independent", "independence of lattice subsets");
  std::string check_set, via = "matrix";
  bool enumerate = false;
  cmd_independent->add_option("--check", check_set,
                              "comma-separated element labels");
  cmd_independent->add_flag("--enumerate", enumerate,
                            "list every independent subset");
  cmd_independent->add_option("--via", via, "decision procedure")
      ->check(CLI::IsMember({"matrix", "partitions", "both"}));
  auto* cmd_irr = app.add_subcommand("irreducibles", "irreducible elements");
  auto* cmd_spec = app.add_subcommand("spec", "spectral morphism");
  auto* cmd_certify =
      app.add_subcommand("certify-rank", "rank = height certificates");
  auto* cmd_hered = app.add_subcommand("hered", "hereditary collections");
  std::string hered_action = "check";
  cmd_hered->add_option("action", hered_action, "check | pr | represent")
      ->check(CLI::IsMember({"check", "pr", "represent"}));
  auto* cmd_export = app.add_subcommand("export", "DOT export");
  cmd_export->add_option("-k,--kind", kind, "input kind")
      ->check(CLI::IsMember({"poset", "lattice", "dm", "uc"}));

  CLI11_PARSE(app, argc, argv);

  Caps caps = caps_from_env();
  json report;
  try {
    std::string raw = read_file(input);
    report["command"] = app.get_subcommands().front()->get_name();
    report["input"] = input;
    report["input_digest"] = input_digest(raw);

    if (cmd_validate->parsed()) {
      report["kind"] = kind;
      if (kind == "matrix") {
        SbMatrix m = load_matrix(raw);
        report["rows"] = m.rows();
        report["cols"] = m.cols();
        report["boolean"] = m.is_boolean();
      } else if (kind == "poset") {
        Poset p = load_poset(raw);
        report["elements"] = p.labels();
      } else if (kind == "lattice") {
        Lattice l = Lattice::validate(load_poset(raw));
        report["elements"] = l.poset().labels();
        report["bottom"] = l.label(l.bottom());
        report["top"] = l.label(l.top());
      } else {
        HeredCollection h = hered_from_json(load_json(raw));
        report["ground"] = h.ground;
        report["family_size"] = h.family.size();
        report["simple"] = is_simple(h);
      }
      report["valid"] = true;
    } else if (cmd_rank->parsed()) {
      SbMatrix m = load_matrix(raw);
      RankResult r = rank(m, caps.sb);
      report["rank"] = r.rank;
      if (r.rank > 0)
        report["witness"] =
            witness_to_json(r.witness, m.row_labels(), m.col_labels());
    } else if (cmd_crank->parsed()) {
      Poset p = load_poset(raw);
      CrankResult r = c_rank(p, caps.sb);
      report["c_rank"] = r.rank;
      if (r.rank > 0) {
        report["independent_set"] = labels_of(p, [&] {
          std::vector<std::size_t> ids;
          for (std::size_t i = 0; i < r.witness.size(); ++i)
            ids.push_back(r.witness.col_ids[r.witness.col_order[i]]);
          return ids;
        }());
        report["witness"] =
            witness_to_json(r.witness, p.labels(), p.labels());
      }
      if (show_matrices) {
        report["structure_matrix"] = matrix_to_json(p.relation());
        report["complement_transpose"] = matrix_to_json(c_matrix(p));
      }
    } else if (cmd_height->parsed()) {
      Poset p = load_poset(raw);
      Poset::Height h = p.height();
      report["height"] = h.length;
      report["chain"] = labels_of(p, h.chain);
    } else if (cmd_complete->parsed()) {
      if (do_dm == do_uc)
        throw ParseError("choose exactly one of --dm or --uc");
      Poset p = load_poset(raw);
      SetFamilyLattice f = do_dm ? dm_completion(p) : union_closure(p);
      if (format == "dot") {
        std::cout << export_dot(f);
        return kExitOk;
      }
      report["variant"] = do_dm ? "dm" : "uc";
      report["size"] = f.members.size();
      report["height"] = f.lattice.poset().height().length;
      json members = json::array();
      for (std::uint64_t mask : f.members) {
        json set = json::array();
        for (std::size_t i = 0; i < f.ground.size(); ++i)
          if (mask & (1ull << i)) set.push_back(f.ground[i]);
        members.push_back(std::move(set));
      }
      report["members"] = std::move(members);
      json embedding = json::object();
      for (std::size_t x = 0; x < p.size(); ++x)
        embedding[p.label(x)] = f.lattice.label(f.origin_map[x]);
      report["embedding"] = std::move(embedding);
    } else if (cmd_chains->parsed()) {
      Lattice l = Lattice::validate(load_poset(raw));
      auto chains = maximal_chains(l, caps.chains);
      report["count"] = chains.size();
      json arr = json::array();
      for (auto& c : chains) arr.push_back(labels_of(l.poset(), c));
      report["chains"] = std::move(arr);
    } else if (cmd_partitions->parsed()) {
      Lattice l = Lattice::validate(load_poset(raw));
      auto chains = maximal_chains(l, caps.chains);
      json arr = json::array();
      for (std::size_t i = 0; i < chains.size(); ++i) {
        if (chain_index >= 0 && static_cast<std::size_t>(chain_index) != i)
          continue;
        ChainPartition part = partition_of_chain(l, chains[i]);
        json blocks = json::array();
        for (auto& b : part.blocks) blocks.push_back(labels_of(l.poset(), b));
        json bs = json::array();
        for (auto& b : bases(part)) bs.push_back(labels_of(l.poset(), b));
        arr.push_back(json{{"chain", labels_of(l.poset(), part.chain)},
                           {"blocks", std::move(blocks)},
                           {"bases", std::move(bs)}});
      }
      if (chain_index >= 0 &&
          static_cast<std::size_t>(chain_index) >= chains.size())
        throw ValidationError("chain index out of range");
      report["partitions"] = std::move(arr);
    } else if (cmd_independent->parsed()) {
      Lattice l = Lattice::validate(load_poset(raw));
      if (enumerate == !check_set.empty())
        throw ParseError("choose exactly one of --check or --enumerate");
      if (enumerate) {
        auto fam = enumerate_independent(l, caps.chains);
        report["count"] = fam.size();
        json arr = json::array();
        for (auto& s : fam) arr.push_back(labels_of(l.poset(), s));
        report["independent_sets"] = std::move(arr);
      } else {
        auto w = parse_elements(l.poset(), check_set);
        report["set"] = labels_of(l.poset(), w);
        if (via == "matrix" || via == "both") {
          auto wit = lattice_independent(l, w, caps.sb);
          report["matrix_independent"] = wit.has_value();
          if (wit) {
            report["witness_elements"] = labels_of(l.poset(), wit->elements);
            report["witness"] = labels_of(l.poset(), wit->witness);
          }
        }
        if (via == "partitions" || via == "both")
          report["partition_independent"] =
              independent_via_partitions(l, w, caps.chains);
        if (via == "both" &&
            report["matrix_independent"] != report["partition_independent"])
          throw SboolError("decision procedures disagree");
      }
    } else if (cmd_irr->parsed()) {
      Lattice l = Lattice::validate(load_poset(raw));
      IrreducibleReport rep = classify_irreducibles(l);
      json per = json::object();
      for (std::size_t x = 0; x < l.size(); ++x)
        per[l.label(x)] = json{{"sji", rep.flags[x].sji},
                               {"ji", rep.flags[x].ji},
                               {"smi", rep.flags[x].smi},
                               {"mi", rep.flags[x].mi}};
      report["elements"] = std::move(per);
      report["sjiNo"] = rep.sji_count;
      report["sjiNoB"] = rep.sji_not_bottom;
      report["jiNoB"] = rep.ji_not_bottom;
      report["smiNo"] = rep.smi_count;
      report["smiNoT"] = rep.smi_not_top;
      report["miNoT"] = rep.mi_not_top;
      report["ss"] = rep.ss();
    } else if (cmd_spec->parsed()) {
      Lattice l = Lattice::validate(load_poset(raw));
      SpecResult s = spec_morphism(l);
      report["coordinates"] = labels_of(l.poset(), s.coordinates);
      report["injective"] = s.injective;
      report["order_embedding"] = s.order_embedding;
      report["image_size"] = s.image_vectors.size();
      json fibers = json::array();
      for (auto& f : s.fibers) fibers.push_back(labels_of(l.poset(), f));
      report["fibers"] = std::move(fibers);
      report["distributive"] = check_distributive(l).distributive;
    } else if (cmd_certify->parsed()) {
      Lattice l = Lattice::validate(load_poset(raw));
      RankCertificates c = crank_equals_height_certificates(l, caps.sb);
      report["c_rank"] = c.c_rank;
      report["height"] = c.height;
      report["chain"] = labels_of(l.poset(), c.chain);
      report["witness_from_chain"] =
          json{{"elements", labels_of(l.poset(), c.witness_from_chain.elements)},
               {"witness", labels_of(l.poset(), c.witness_from_chain.witness)}};
      report["chain_from_witness"] = labels_of(l.poset(), c.chain_from_witness);
    } else if (cmd_hered->parsed()) {
      HeredCollection h = hered_from_json(load_json(raw));
      if (hered_action == "check") {
        report["ground"] = h.ground;
        report["family_size"] = h.family.size();
        json bs = json::array();
        for (std::uint64_t b : h.bases()) bs.push_back(set_to_json(h, b));
        report["bases"] = std::move(bs);
        json cs = json::array();
        for (std::uint64_t c : circuits(h)) cs.push_back(set_to_json(h, c));
        report["circuits"] = std::move(cs);
        report["simple"] = is_simple(h);
      } else if (hered_action == "pr") {
        PrCheck pr = satisfies_pr(h);
        report["pr"] = pr.ok;
        if (!pr.ok) {
          report["violating_point"] = h.ground[pr.point];
          report["violating_set"] = set_to_json(h, pr.violating);
        }
      } else {
        ReprVerdict v = partition_representability(h, caps.hered_ground);
        report["status"] = v.status == ReprStatus::Sat ? "sat"
                           : v.status == ReprStatus::Unsat
                               ? "unsat"
                               : "sat-matrix-failed";
        auto partition_json = [&](const GroundPartition& gp) {
          json blocks = json::array();
          for (std::uint64_t b : gp.blocks) blocks.push_back(set_to_json(h, b));
          return blocks;
        };
        if (v.status == ReprStatus::Unsat) {
          report["obstructed_basis"] = set_to_json(h, v.obstructed_basis);
          json obs = json::array();
          for (auto& ob : v.obstructions) {
            json sections = json::array();
            for (std::uint64_t s : ob.violating_sections)
              sections.push_back(set_to_json(h, s));
            obs.push_back(json{{"partition", partition_json(ob.partition)},
                               {"violating_sections", std::move(sections)}});
          }
          report["obstructions"] = std::move(obs);
        } else {
          json parts = json::array();
          for (auto& gp : v.partitions) parts.push_back(partition_json(gp));
          report["partitions"] = std::move(parts);
          if (v.matrix) report["matrix"] = matrix_to_json(*v.matrix);
        }
      }
    } else if (cmd_export->parsed()) {
      if (kind == "poset" || kind == "lattice") {
        Poset p = load_poset(raw);
        if (kind == "lattice") Lattice::validate(p);
        std::cout << export_dot(p);
      } else {
        Poset p = load_poset(raw);
        SetFamilyLattice f = kind == "dm" ? dm_completion(p) : union_closure(p);
        std::cout << export_dot(f);
      }
      return kExitOk;
    }
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const SboolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  emit(report, format);
  return kExitOk;
}
