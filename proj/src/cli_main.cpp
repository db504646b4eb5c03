#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "ztilt/exactlin.hpp"
#include "ztilt/grassmann.hpp"
#include "ztilt/polyrep.hpp"
#include "ztilt/qha.hpp"
#include "ztilt/young.hpp"

// Command line front door. Reports go to stdout (or --out) verbatim and are
// byte identical across runs; a one line verdict goes to stderr, colored
// only on a terminal without NO_COLOR. Exit codes: 0 pass, 1 fail,
// 2 inconclusive, 3 usage error.

namespace {

namespace exactlin = ztilt::exactlin;
namespace young = ztilt::young;
namespace polyrep = ztilt::polyrep;
namespace qha = ztilt::qha;
namespace grassmann = ztilt::grassmann;

using exactlin::Int;
using exactlin::IntegerMatrix;
using nlohmann::ordered_json;
using qha::Verdict;

constexpr int kDeskCap = 6;

std::string disp(const young::Partition &p) {
  std::string s = young::partition_str(p);
  return s.empty() ? "0" : s;
}

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

void check_primes(const std::vector<std::uint32_t> &primes) {
  for (std::uint32_t p : primes)
    if (!is_prime(p))
      throw std::invalid_argument("--mod takes primes, got " +
                                  std::to_string(p));
}

Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Desk scale guardrail: block past the cap unless --allow-large, and then
// still warn with the size of the dominant computation.
void guard(int n, bool allow_large, const Int &estimate,
           const std::string &what) {
  if (n <= kDeskCap)
    return;
  std::ostringstream msg;
  msg << "n = " << n << " is past the desk scale cap " << kDeskCap << " ("
      << what << " is about " << estimate.get_str() << ")";
  if (!allow_large)
    throw std::invalid_argument(msg.str() + "; pass --allow-large to proceed");
  std::cerr << "warning: " << msg.str() << ", proceeding\n";
}

int exit_code(Verdict v) {
  return v == Verdict::pass ? 0 : v == Verdict::fail ? 1 : 2;
}

void verdict_line(Verdict v) {
  const char *word = qha::verdict_str(v);
  if (isatty(2) && std::getenv("NO_COLOR") == nullptr) {
    const char *code = v == Verdict::pass   ? "32"
                       : v == Verdict::fail ? "31"
                                            : "33";
    std::cerr << "\033[" << code << "mverdict: " << word << "\033[0m\n";
  } else {
    std::cerr << "verdict: " << word << "\n";
  }
}

void emit(std::string text, const std::string &out) {
  if (!text.empty() && text.back() != '\n')
    text += '\n';
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot open output file " + out);
  f << text;
}

// ---------------------------------------------------------------- schur ---

struct SchurRun {
  int n = 0, d = 0, max_ext = 6;
  std::vector<std::uint32_t> primes;

  std::size_t rank = 0;
  Int expected;
  bool exhaustive = false;
  Verdict closure = Verdict::inconclusive;

  struct ModRow {
    std::string label;
    long s_rank = 0, w_rank = 0, tableaux = 0;
    std::size_t intertwiners = 0;
    Int det;
    bool ok = false;
  };
  std::vector<ModRow> mods;
  Verdict duality = Verdict::inconclusive;

  grassmann::RankTable pairing_table;
  Verdict pairing = Verdict::inconclusive;

  long bc_cells = 0;
  std::vector<std::string> bc_failures;
  Verdict base_change = Verdict::inconclusive;

  Verdict overall() const {
    Verdict v = qha::combine(closure, qha::combine(duality, pairing));
    if (!primes.empty())
      v = qha::combine(v, base_change);
    return v;
  }
};

SchurRun run_schur(int n, int d, std::vector<std::uint32_t> primes,
                   int max_ext) {
  SchurRun r;
  r.n = n;
  r.d = d;
  r.max_ext = max_ext >= 0 ? max_ext : 6;
  r.primes = std::move(primes);

  polyrep::SchurPtr alg = polyrep::schur_algebra(n, d);
  r.rank = alg->rank();
  r.expected =
      d == 0 ? Int(1)
             : binom((unsigned long)(n * n + d - 1), (unsigned long)d);
  // the exported table holds every basis product, each one certified on
  // construction; verify() adds unit laws and associativity
  qha::AlgebraPtr fin = polyrep::as_fin_algebra(alg);
  fin->verify();
  r.exhaustive = r.rank <= 200;
  r.closure = Int((long)r.rank) == r.expected ? Verdict::pass : Verdict::fail;

  std::vector<young::Partition> parts = young::box_partitions(d, n, d);
  r.duality = Verdict::pass;
  std::vector<qha::AlgModule> smods;
  std::vector<qha::Resolution> wres;
  std::size_t steps = std::max({std::size_t(12), 2 * parts.size(),
                                std::size_t(r.max_ext) + 2});
  for (const young::Partition &lam : parts) {
    polyrep::RepModule sm = polyrep::schur_module(alg, lam);
    sm.name = "S[" + disp(lam) + "]";
    polyrep::RepModule wm = polyrep::weyl_module(alg, lam);
    wm.name = "W[" + disp(lam) + "]";

    SchurRun::ModRow row;
    row.label = disp(lam);
    row.s_rank = (long)sm.rank();
    row.w_rank = (long)wm.rank();
    row.tableaux = young::ssyt_count(lam, n);
    polyrep::RepModule ds = polyrep::dual_module(sm);
    std::vector<IntegerMatrix> homs = polyrep::rep_hom(ds, wm);
    row.intertwiners = homs.size();
    if (homs.size() == 1)
      row.det = exactlin::det(homs[0]);
    row.ok = row.s_rank == row.tableaux && row.w_rank == row.tableaux &&
             row.intertwiners == 1 && (row.det == 1 || row.det == -1);
    if (!row.ok)
      r.duality = Verdict::fail;
    r.mods.push_back(std::move(row));

    smods.push_back(polyrep::as_alg_module(sm, fin));
    wres.push_back(qha::resolve(polyrep::as_alg_module(wm, fin), steps));
  }

  r.pairing = Verdict::pass;
  r.base_change = Verdict::pass;
  r.pairing_table.name = "weyl-against-schur pairing";
  for (const young::Partition &lam : parts) {
    r.pairing_table.rows.push_back(disp(lam));
    r.pairing_table.cols.push_back(disp(lam));
  }
  r.pairing_table.ext.resize(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      qha::ExtResult e = qha::ext_from_resolution(wres[i], smods[j], r.max_ext);
      bool diag = i == j;
      if (e.hom_rank() != (diag ? 1 : 0) || !e.positive_degrees_vanish() ||
          e.any_torsion())
        r.pairing = Verdict::fail;
      else if (!e.terminated)
        r.pairing = qha::combine(r.pairing, Verdict::inconclusive);
      if (e.terminated) {
        for (std::uint32_t p : r.primes) {
          ++r.bc_cells;
          std::vector<long> dims = qha::ext_dims_mod_p(e, p);
          bool same = dims.size() == e.free_rank.size();
          for (std::size_t t = 0; same && t < dims.size(); ++t)
            same = dims[t] == e.free_rank[t];
          if (!same) {
            r.base_change = Verdict::fail;
            r.bc_failures.push_back("Ext(W_" + disp(parts[i]) + ", S_" +
                                    disp(parts[j]) + ") mod " +
                                    std::to_string(p));
          }
        }
      } else if (!r.primes.empty()) {
        r.base_change = qha::combine(r.base_change, Verdict::inconclusive);
      }
      r.pairing_table.ext[i].push_back(std::move(e));
    }
  return r;
}

std::string schur_markdown(const SchurRun &r) {
  std::ostringstream os;
  const char *vs;
  os << "# Schur algebra S(" << r.n << ", " << r.d << ") verification\n\n";

  os << "## Closure and unit\n\n";
  os << "rank S = " << r.rank << ", weighted monomial count C(" << r.n * r.n
     << " + " << r.d << " - 1, " << r.d << ") = " << r.expected.get_str()
     << ": " << qha::verdict_str(r.closure) << "\n\n";
  os << "All " << r.rank * r.rank
     << " basis products certified during table construction; unit laws on "
        "every basis element; associativity "
     << (r.exhaustive ? "checked on all basis triples"
                      : "spot checked on sampled triples")
     << ".\n\n";

  os << "## Module ranks and duality\n\n";
  os << "| lambda | rank S | rank W | tableaux | intertwiner det |\n";
  os << "|--|--|--|--|--|\n";
  for (const SchurRun::ModRow &m : r.mods) {
    os << "| " << m.label << " | " << m.s_rank << " | " << m.w_rank << " | "
       << m.tableaux << " | ";
    if (m.intertwiners == 1)
      os << m.det.get_str();
    else
      os << "rank " << m.intertwiners;
    os << (m.ok ? "" : " FAIL") << " |\n";
  }
  vs = qha::verdict_str(r.duality);
  os << "\nContravariant dual of each Schur module meets its Weyl module in "
        "a rank one intertwiner lattice with unimodular generator: "
     << vs << "\n\n";

  os << "## Standard against costandard pairing\n\n";
  os << "Ext^i(W_lambda, S_mu) for i <= " << r.max_ext
     << "; cells list free ranks from degree 0, \".\" means zero, \"+t\" "
        "flags torsion, \"?\" an unterminated resolution.\n\n";
  os << grassmann::rank_table_markdown(r.pairing_table);
  os << "Identity in degree zero, zero elsewhere, torsion free: "
     << qha::verdict_str(r.pairing) << "\n\n";

  os << "## Base change\n\n";
  if (r.primes.empty()) {
    os << "No primes requested.\n";
  } else {
    os << "Primes";
    for (std::uint32_t p : r.primes)
      os << " " << p;
    os << ": modular Ext dimensions against integer ranks on " << r.bc_cells
       << " cells: " << qha::verdict_str(r.base_change) << "\n";
    for (const std::string &f : r.bc_failures)
      os << "- mismatch at " << f << "\n";
  }
  return os.str();
}

std::string schur_json(const SchurRun &r) {
  ordered_json root;
  root["config"] = {{"command", "verify-schur"},
                    {"n", r.n},
                    {"d", r.d},
                    {"max_ext", r.max_ext},
                    {"primes", r.primes}};
  ordered_json sections = ordered_json::array();

  sections.push_back(
      {{"theorem", "schur-algebra-closure"},
       {"verdict", qha::verdict_str(r.closure)},
       {"tables",
        {{"rank", r.rank},
         {"expected", r.expected.get_str()},
         {"associativity", r.exhaustive ? "exhaustive" : "sampled"}}},
       {"torsion", ordered_json::array()}});

  ordered_json mods = ordered_json::array();
  for (const SchurRun::ModRow &m : r.mods)
    mods.push_back({{"lambda", m.label},
                    {"schur_rank", m.s_rank},
                    {"weyl_rank", m.w_rank},
                    {"tableaux", m.tableaux},
                    {"intertwiners", m.intertwiners},
                    {"det", m.intertwiners == 1 ? m.det.get_str() : ""}});
  sections.push_back({{"theorem", "module-ranks-and-duality"},
                      {"verdict", qha::verdict_str(r.duality)},
                      {"tables", {{"modules", mods}}},
                      {"torsion", ordered_json::array()}});

  ordered_json torsion = ordered_json::array();
  for (std::size_t i = 0; i < r.pairing_table.ext.size(); ++i)
    for (std::size_t j = 0; j < r.pairing_table.ext[i].size(); ++j)
      if (r.pairing_table.ext[i][j].any_torsion())
        torsion.push_back(r.pairing_table.rows[i] + "|" +
                          r.pairing_table.cols[j]);
  sections.push_back(
      {{"theorem", "standard-costandard-pairing"},
       {"verdict", qha::verdict_str(r.pairing)},
       {"tables",
        ordered_json::parse(grassmann::rank_table_json(r.pairing_table))},
       {"torsion", torsion}});

  if (!r.primes.empty())
    sections.push_back({{"theorem", "base-change"},
                        {"verdict", qha::verdict_str(r.base_change)},
                        {"tables",
                         {{"primes", r.primes},
                          {"cells", r.bc_cells},
                          {"failures", r.bc_failures}}},
                        {"torsion", ordered_json::array()}});

  root["sections"] = sections;
  return root.dump(2);
}

// ---------------------------------------------------------------- export ---

ordered_json module_json(const qha::AlgModule &m, const std::string &algebra,
                         const std::string &name) {
  ordered_json j;
  j["algebra"] = algebra;
  j["name"] = name;
  j["rank"] = m.rank;
  ordered_json acts = ordered_json::array();
  for (const IntegerMatrix &a : m.action) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t jj = 0; jj < a.cols(); ++jj)
        row.push_back(a.at(i, jj).get_str());
      rows.push_back(std::move(row));
    }
    acts.push_back(std::move(rows));
  }
  j["action"] = acts;
  return j;
}

std::string export_json(grassmann::TiltingData &t) {
  std::string name =
      "B(" + std::to_string(t.cfg.k) + "," + std::to_string(t.cfg.n) + ")";
  ordered_json root;
  root["name"] = name;

  ordered_json alg;
  alg["rank"] = t.b->rank();
  alg["basis"] = t.b->labels();
  ordered_json unit = ordered_json::array();
  for (const Int &u : t.b->unit())
    unit.push_back(u.get_str());
  alg["unit"] = unit;
  // zero entries omitted: the stored products are sparse already
  ordered_json sc = ordered_json::array();
  for (std::size_t i = 0; i < t.b->rank(); ++i)
    for (std::size_t j = 0; j < t.b->rank(); ++j)
      for (const auto &term : t.b->product(i, j))
        sc.push_back(ordered_json::array(
            {i, j, term.first, term.second.get_str()}));
  alg["structure_constants"] = sc;
  root["algebra"] = alg;

  std::vector<qha::AlgModule> std1 = grassmann::standard_family_1(t);
  std::vector<qha::AlgModule> costd;
  std::vector<std::string> wlabels;
  for (int c = 0; c < (int)t.deg.size(); ++c) {
    const grassmann::DegreeData &dd = t.deg[t.cfg.degree(c)];
    for (std::size_t s = 0; s < dd.costandards.size(); ++s) {
      costd.push_back(qha::functor_F(t.datum, t.b, c, dd.costandards[s]));
      wlabels.push_back(std::to_string(c + 1) + ":" + dd.weight_labels[s]);
    }
  }
  ordered_json stds = ordered_json::array(), costds = ordered_json::array();
  for (std::size_t w = 0; w < std1.size(); ++w) {
    stds.push_back(module_json(std1[w], name, wlabels[w]));
    costds.push_back(module_json(costd[w], name, wlabels[w]));
  }
  root["standard"] = stds;
  root["costandard"] = costds;
  return root.dump(2);
}

// ---------------------------------------------------------------- import ---

int run_import_inner(std::istream &f);

int run_import(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot open input file " + path);
  // problems inside the file are data failures, not usage errors
  try {
    return run_import_inner(f);
  } catch (const std::invalid_argument &e) {
    throw std::runtime_error(e.what());
  }
}

int run_import_inner(std::istream &f) {
  ordered_json root = ordered_json::parse(f);

  const ordered_json &aj = root.at("algebra");
  std::size_t rank = aj.at("rank").get<std::size_t>();
  std::vector<std::string> labels =
      aj.at("basis").get<std::vector<std::string>>();
  if (labels.size() != rank)
    throw std::runtime_error("basis size disagrees with rank");
  std::vector<Int> unit;
  for (const ordered_json &u : aj.at("unit"))
    unit.emplace_back(u.get<std::string>());
  std::vector<std::vector<qha::SparseVec>> table(
      rank, std::vector<qha::SparseVec>(rank));
  for (const ordered_json &term : aj.at("structure_constants")) {
    std::size_t i = term.at(0).get<std::size_t>();
    std::size_t j = term.at(1).get<std::size_t>();
    std::size_t k = term.at(2).get<std::size_t>();
    if (i >= rank || j >= rank || k >= rank)
      throw std::runtime_error("structure constant index out of range");
    table[i][j].emplace_back(k, Int(term.at(3).get<std::string>()));
  }
  qha::AlgebraPtr b = qha::make_algebra(labels, table, unit);
  // exhaustive associativity for anything desk sized
  b->verify(std::max<std::size_t>(200, rank));

  std::size_t modules = 0;
  for (const char *key : {"standard", "costandard"}) {
    if (!root.contains(key))
      continue;
    for (const ordered_json &mj : root.at(key)) {
      qha::AlgModule m;
      m.algebra = b;
      m.rank = mj.at("rank").get<std::size_t>();
      m.name = mj.value("name", std::string(key));
      const ordered_json &acts = mj.at("action");
      if (acts.size() != rank)
        throw std::runtime_error("module " + m.name +
                                 " has the wrong number of action matrices");
      for (const ordered_json &mat : acts) {
        IntegerMatrix a = IntegerMatrix::zero(m.rank, m.rank);
        if (mat.size() != m.rank)
          throw std::runtime_error("bad action matrix in " + m.name);
        for (std::size_t i = 0; i < m.rank; ++i) {
          if (mat.at(i).size() != m.rank)
            throw std::runtime_error("bad action matrix in " + m.name);
          for (std::size_t j = 0; j < m.rank; ++j)
            a.at(i, j) = Int(mat.at(i).at(j).get<std::string>());
        }
        m.action.push_back(std::move(a));
      }
      m.verify();
      ++modules;
    }
  }
  std::cout << "import: algebra of rank " << rank << " verified, " << modules
            << " modules verified\n";
  verdict_line(Verdict::pass);
  return 0;
}

// ----------------------------------------------------------------- table ---

qha::ExtResult zero_cell(int max_ext) {
  qha::ExtResult e;
  e.free_rank.assign(max_ext + 1, 0);
  e.torsion.assign(max_ext + 1, {});
  e.terminated = true;
  e.max_degree = max_ext;
  return e;
}

int run_table(const std::string &kind, int k, int n, int max_ext,
              const std::string &format, const std::string &out,
              bool allow_large) {
  grassmann::GrassmannConfig cfg = grassmann::grassmann_config(k, n);
  guard(n, allow_large,
        binom((unsigned long)(k * n + cfg.d_max - 1),
              (unsigned long)cfg.d_max),
        "rank of the top symmetric power");
  grassmann::TiltingData t = grassmann::build_tilting(k, n);
  int me = max_ext >= 0 ? max_ext : t.default_max_ext();

  std::vector<young::Partition> flat;
  std::vector<int> fdeg;
  for (int d = 0; d <= t.cfg.d_max; ++d)
    for (const young::Partition &p : t.cfg.by_degree[d]) {
      flat.push_back(p);
      fdeg.push_back(d);
    }

  grassmann::RankTable tab;
  tab.name = kind + " table for Gr(" + std::to_string(k) + ", " +
             std::to_string(n) + ")";
  for (const young::Partition &p : flat) {
    tab.rows.push_back(disp(p));
    tab.cols.push_back(disp(p));
  }
  tab.ext.resize(flat.size());

  std::vector<polyrep::RepModule> rows_m, cols_m;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (kind == "schur") {
      polyrep::RepModule s = polyrep::schur_module(t.deg[fdeg[i]].schur,
                                                   flat[i]);
      s.name = "S[" + disp(flat[i]) + "]";
      rows_m.push_back(s);
      cols_m.push_back(std::move(s));
    } else if (kind == "weyl") {
      polyrep::RepModule w = polyrep::weyl_module(t.deg[fdeg[i]].schur,
                                                  flat[i]);
      w.name = "W[" + disp(flat[i]) + "]";
      rows_m.push_back(w);
      cols_m.push_back(std::move(w));
    } else { // dual-pairing: Weyl rows against Schur columns
      polyrep::RepModule w = polyrep::weyl_module(t.deg[fdeg[i]].schur,
                                                  flat[i]);
      w.name = "W[" + disp(flat[i]) + "]";
      rows_m.push_back(std::move(w));
      polyrep::RepModule s = polyrep::schur_module(t.deg[fdeg[i]].schur,
                                                   flat[i]);
      s.name = "S[" + disp(flat[i]) + "]";
      cols_m.push_back(std::move(s));
    }
  }

  bool pairing = kind == "dual-pairing";
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = 0; j < flat.size(); ++j) {
      // the delta pairing lives degree by degree; cross degree pairs are
      // zero by convention
      if (pairing && fdeg[i] != fdeg[j])
        tab.ext[i].push_back(zero_cell(me));
      else
        tab.ext[i].push_back(geometric_rhom(t, rows_m[i], fdeg[i], cols_m[j],
                                            fdeg[j], me));
    }

  if (format == "json") {
    ordered_json root;
    root["config"] = {{"command", "table"}, {"kind", kind}, {"k", k},
                      {"n", n},             {"max_ext", me}};
    root["table"] = ordered_json::parse(grassmann::rank_table_json(tab));
    emit(root.dump(2), out);
  } else {
    std::ostringstream os;
    os << "Cells list free ranks from degree 0, \".\" means zero, \"+t\" "
          "flags torsion.";
    if (pairing)
      os << " Pairs in different degrees pair to zero.";
    os << "\n\n" << grassmann::rank_table_markdown(tab);
    emit(os.str(), out);
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact integer verification of Schur algebras, glued "
               "quasi-hereditary algebras and Grassmannian tilting"};
  app.require_subcommand(1);

  int n = 0, d = 0, k = 0, max_ext = -1;
  std::vector<std::uint32_t> primes;
  std::string out, format = "markdown", in_path, kind;
  bool allow_large = false;

  auto add_report = [&](CLI::App *sub) {
    sub->add_option("--out", out, "write the report to this file");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"markdown", "json"}));
  };

  CLI::App *vs = app.add_subcommand(
      "verify-schur", "closure, module ranks, duality and the pairing grid "
                      "of one Schur algebra");
  vs->add_option("--n", n, "number of variables")
      ->required()
      ->check(CLI::NonNegativeNumber);
  vs->add_option("--d", d, "polynomial degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  vs->add_option("--mod", primes, "also reduce the grids mod these primes");
  vs->add_option("--max-ext", max_ext, "top Ext degree (default 6)");
  vs->add_flag("--allow-large", allow_large, "escape the desk scale cap");
  add_report(vs);

  CLI::App *vg = app.add_subcommand(
      "verify-grassmannian",
      "full tilting pipeline for Gr(k, n): gluing, both highest weight "
      "structures, collection tables, base change");
  vg->add_option("--k", k, "subspace dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  vg->add_option("--n", n, "ambient dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  vg->add_option("--mod", primes, "base change primes");
  vg->add_option("--max-ext", max_ext, "top Ext degree");
  vg->add_flag("--allow-large", allow_large, "escape the desk scale cap");
  add_report(vg);

  CLI::App *ex = app.add_subcommand(
      "export", "emit B(k, n) with its standard and costandard modules as "
                "JSON (integers as decimal strings)");
  ex->add_option("--k", k, "subspace dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  ex->add_option("--n", n, "ambient dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  ex->add_option("--out", out, "write the JSON here instead of stdout");
  ex->add_flag("--allow-large", allow_large, "escape the desk scale cap");

  CLI::App *im = app.add_subcommand(
      "import", "read an exported algebra back and re-verify associativity, "
                "unit laws and every module action");
  im->add_option("--in", in_path, "exported JSON file")->required();

  CLI::App *tb = app.add_subcommand(
      "table", "print one rank table for Gr(k, n) over all summand pairs");
  tb->add_option("kind", kind, "schur, weyl or dual-pairing")
      ->required()
      ->check(CLI::IsMember({"schur", "weyl", "dual-pairing"}));
  tb->add_option("--k", k, "subspace dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  tb->add_option("--n", n, "ambient dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  tb->add_option("--max-ext", max_ext, "top Ext degree");
  tb->add_flag("--allow-large", allow_large, "escape the desk scale cap");
  add_report(tb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    check_primes(primes);
    if (app.got_subcommand(vs)) {
      Int amb;
      mpz_ui_pow_ui(amb.get_mpz_t(), (unsigned long)std::max(n, 1),
                    (unsigned long)(2 * d));
      guard(n, allow_large, amb, "the orbit scan");
      SchurRun r = run_schur(n, d, primes, max_ext);
      emit(format == "json" ? schur_json(r) : schur_markdown(r), out);
      verdict_line(r.overall());
      return exit_code(r.overall());
    }
    if (app.got_subcommand(vg)) {
      grassmann::GrassmannConfig cfg = grassmann::grassmann_config(k, n);
      guard(n, allow_large,
            binom((unsigned long)(k * n + cfg.d_max - 1),
                  (unsigned long)cfg.d_max),
            "rank of the top symmetric power");
      grassmann::GrassmannReport r =
          grassmann::verify_grassmannian(k, n, primes, max_ext);
      emit(format == "json" ? r.to_json() : r.to_markdown(), out);
      verdict_line(r.overall());
      return exit_code(r.overall());
    }
    if (app.got_subcommand(ex)) {
      grassmann::GrassmannConfig cfg = grassmann::grassmann_config(k, n);
      guard(n, allow_large,
            binom((unsigned long)(k * n + cfg.d_max - 1),
                  (unsigned long)cfg.d_max),
            "rank of the top symmetric power");
      grassmann::TiltingData t = grassmann::build_tilting(k, n);
      emit(export_json(t), out);
      return 0;
    }
    if (app.got_subcommand(im))
      return run_import(in_path);
    if (app.got_subcommand(tb))
      return run_table(kind, k, n, max_ext, format, out, allow_large);
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    verdict_line(Verdict::fail);
    return 1;
  }
  return 3;
}
