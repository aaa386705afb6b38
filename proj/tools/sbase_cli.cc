#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sbase/bounds.hpp"
#include "sbase/errors.hpp"
#include "scenarios.hpp"

using namespace sbase;
using namespace sbase::cli;

namespace {

constexpr int kUsage = 3;

struct Flags {
  RunOptions run;
  ConstructParams con;
  std::string format = "text";
  std::string out;
};

void add_run_flags(CLI::App* app, Flags& f) {
  app->add_option("--seed", f.run.seed, "seed for every random choice");
  app->add_option("--trials", f.run.trials, "search trials");
  app->add_option("--closure-cap", f.run.closure_cap, "largest group enumerated");
  app->add_option("--index-cap", f.run.index_cap, "largest coset space")
      ->check(CLI::Range(uint64_t{1}, uint64_t{CosetSpace::kMaxIndex}));
  app->add_option("--work-cap", f.run.work_cap, "tuple-search work limit");
  app->add_option("--jobs", f.run.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--timings", f.run.timings, "record wall time in certificates");
  app->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

std::string certs_json(const std::vector<Certificate>& cs) {
  if (cs.size() == 1) return cs[0].to_json();
  std::string s = "[\n";
  for (size_t i = 0; i < cs.size(); ++i) {
    std::string c = cs[i].to_json();
    c.pop_back();
    s += c + (i + 1 < cs.size() ? ",\n" : "\n");
  }
  return s + "]\n";
}

std::vector<Certificate> read_certs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  std::vector<Certificate> out;
  if (j.is_array())
    for (auto& e : j) out.push_back(Certificate::from_json(e.dump()));
  else
    out.push_back(Certificate::from_json(j.dump()));
  return out;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(f.out, std::ios::binary);
  o << text;
}

int cmd_list() {
  for (auto& s : scenarios()) std::cout << s.name << "\t\"" << s.anchor << "\"\t" << s.expect << "\n";
  return 0;
}

int cmd_verify(const std::string& name, const std::string& cert_file, const Flags& f) {
  if (!cert_file.empty()) {
    Status st = Status::verified;
    json report = json::array();
    for (auto& c : read_certs(cert_file)) {
      Outcome o = verify_certificate(c, f.run);
      st = worst(st, o.status);
      if (f.format == "json")
        report.push_back({{"case", c.case_name}, {"claim", claim_name(c.claim.kind)}, {"status", status_name(o.status)}});
      else {
        std::cout << c.case_name << " " << claim_name(c.claim.kind) << ": " << status_name(o.status) << "\n";
        for (auto& l : o.lines) std::cout << "  " << l << "\n";
      }
    }
    if (f.format == "json") std::cout << report.dump(2) << "\n";
    return static_cast<int>(st);
  }
  const Scenario* s = find_scenario(name);
  if (!s) throw InvalidArgument("unknown scenario: " + name + " (see --list)");
  Outcome o = s->run(f.run);
  if (f.format == "json") {
    emit(f, certs_json(o.certs));
  } else {
    std::cout << "scenario " << s->name << "\nanchor \"" << s->anchor << "\"\nexpect " << s->expect << "\n";
    for (auto& l : o.lines) std::cout << "  " << l << "\n";
    std::cout << "status " << status_name(o.status) << "\n";
    if (!f.out.empty() && !o.certs.empty()) emit(f, certs_json(o.certs));
  }
  return static_cast<int>(o.status);
}

int cmd_construct(const std::string& tag, const Flags& f) {
  Construction c = construct(tag, f.con);
  if (f.format == "json") {
    json j;
    j["tag"] = c.tag;
    for (auto& [k, v] : c.items) j["items"][k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& [k, v] : c.items) std::cout << k << " = " << v << "\n";
  }
  return 0;
}

int cmd_reproduce(const std::string& table, const Flags& f) {
  auto rows = reproduce(table, f.run);
  Status st = Status::verified;
  if (f.format == "json") {
    json j = json::array();
    for (auto& r : rows)
      j.push_back({{"case", r.id}, {"claimed", r.claimed}, {"computed", r.computed}, {"status", status_name(r.status)}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "case\tclaimed\tcomputed\tmatch\n";
    for (auto& r : rows)
      std::cout << r.id << '\t' << r.claimed << '\t' << r.computed << '\t' << status_name(r.status) << "\n";
  }
  for (auto& r : rows) st = worst(st, r.status);
  return static_cast<int>(st);
}

mpq_class parse_q(const std::string& s) {
  try {
    mpq_class v(s);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("not a rational: " + s);
  }
}

std::string threshold_table(const std::vector<ThresholdRow>& rows) {
  std::ostringstream os;
  os << "q\tvalue\tapprox\tverdict\n";
  for (auto& r : rows)
    os << r.q << '\t' << r.value.str() << '\t' << r.value.approx() << '\t' << (r.below_one ? "lt1" : "ge1") << "\n";
  os << "below one for every scanned q >= " << threshold(rows) << "\n";
  return os.str();
}

struct BoundsArgs {
  int n = 0, nmin = 4, nmax = 8, m = 0, s = 0, c = 2;
  uint64_t q = 0, qmax = 16;
  std::string order, A, B;
  bool exact = false;
};

int cmd_bounds(const std::string& sub, const BoundsArgs& a) {
  if (sub == "sinbase") {
    std::cout << sinbase_tsv(sinbase_scan(a.nmin, a.nmax, a.qmax));
    std::cout << "flagged:";
    for (auto& r : sinbase_scan(a.nmin, a.nmax, a.qmax))
      if (r.flagged) std::cout << " (" << r.n << "," << r.q << ")";
    std::cout << "\n";
  } else if (sub == "gluck-manz") {
    RootRational v = gluck_manz(a.n, a.q);
    std::cout << "q^(9n/4)/2.8 = " << v.str() << " ~ " << v.approx() << "\n";
    if (!a.order.empty()) {
      mpz_class o(a.order);
      bool h = gluck_manz_holds(o, a.n, a.q);
      std::cout << "|S| = " << o << (h ? " < " : " >= ") << "bound\n";
      return h ? 0 : 1;
    }
  } else if (sub == "case2-n5") {
    std::cout << "(25^2 + 500^2 + 624^2) / B, B = " << (a.exact ? "(1/10) q^(25/2)" : "(1/10) q^12") << "\n";
    std::cout << threshold_table(case2_n5(a.qmax, a.exact));
  } else if (sub == "case3-n4") {
    std::cout << "a^2/b, a = 48(q+1), b = (1/8) q^6, q odd\n" << threshold_table(case3_n4(a.qmax));
  } else if (sub == "class-size") {
    mpq_class v = class_size_lower(a.n, a.q, a.s);
    std::cout << v << "\n";
  } else if (sub == "primitive-h") {
    HBound h = primitive_H_bound({a.n, a.q, a.m});
    std::cout << "printed\t" << h.printed.str() << "\nwith |F:A|\t" << h.with_fa.str() << "\nSp product\t"
              << h.sp_product << "\n";
  } else if (sub == "qhat") {
    RootRational v = qhat_AB(RootRational(parse_q(a.A)), RootRational(parse_q(a.B)), a.c);
    std::cout << v.str() << "\t" << (v < RootRational::from_int(1) ? "lt1" : "ge1") << "\n";
  } else {
    throw InvalidArgument("unknown bounds table: " + sub);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvable point stabilizers: constructions, base sizes, bounds"};
  app.require_subcommand(1);
  Flags f;

  auto* con = app.add_subcommand("construct", "print a named construction");
  std::string tag;
  con->add_option("tag", tag, "construction tag")->required();
  con->add_option("--n", f.con.n);
  con->add_option("--q", f.con.q);
  con->add_option("--a", f.con.a);
  con->add_option("--m", f.con.m);
  con->add_option("--r", f.con.r);
  con->add_option("--l", f.con.l);
  con->add_option("--dt", f.con.dt);
  con->add_option("--j1", f.con.j1);
  con->add_option("--lambda", f.con.lambda, "block starts for the q23 variants");
  con->add_option("--format", f.format)->check(CLI::IsMember({"text", "json"}));
  con->add_flag_callback("--list", [] {
    for (auto& t : construct_tags()) std::cout << t << "\n";
    throw CLI::Success();
  });

  auto* ver = app.add_subcommand("verify", "run a scenario or re-check a certificate");
  std::string scen, cert;
  ver->add_option("scenario", scen, "scenario name");
  ver->add_option("--cert", cert, "certificate file to re-check");
  ver->add_option("--out", f.out, "write certificates here");
  ver->add_option("--nmax", f.run.nmax, "witness sweeps: largest n");
  ver->add_option("--qmax", f.run.qmax, "witness sweeps: largest q");
  add_run_flags(ver, f);
  bool list = false;
  ver->add_flag("--list", list, "list scenarios with their anchor quotes");

  auto* bnd = app.add_subcommand("bounds", "exact bound tables");
  std::string sub;
  BoundsArgs ba;
  bnd->add_option("table", sub, "sinbase | gluck-manz | case2-n5 | case3-n4 | class-size | primitive-h | qhat")
      ->required();
  bnd->add_option("--n", ba.n);
  bnd->add_option("--nmin", ba.nmin);
  bnd->add_option("--nmax", ba.nmax);
  bnd->add_option("--q", ba.q);
  bnd->add_option("--qmax", ba.qmax);
  bnd->add_option("--m", ba.m);
  bnd->add_option("--s", ba.s);
  bnd->add_option("--c", ba.c);
  bnd->add_option("--order", ba.order, "group order to test against the bound");
  bnd->add_option("--A", ba.A);
  bnd->add_option("--B", ba.B);
  bnd->add_flag("--exact", ba.exact, "case2-n5: keep q^(25/2) instead of q^12");

  auto* rep = app.add_subcommand("reproduce", "recompute a result table");
  std::string table;
  rep->add_option("table", table, "thm-3.11 | table-1");
  add_run_flags(rep, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // prints help for --help
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*con) return cmd_construct(tag, f);
    if (*ver) {
      if (list) return cmd_list();
      if (scen.empty() == cert.empty()) throw InvalidArgument("give a scenario name or --cert, not both");
      return cmd_verify(scen, cert, f);
    }
    if (*bnd) return cmd_bounds(sub, ba);
    if (*rep) return cmd_reproduce(table, f);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return static_cast<int>(Status::inconclusive);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
