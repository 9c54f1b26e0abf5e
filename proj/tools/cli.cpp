#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "burau_lab/braid_word.hpp"
#include "burau_lab/burau.hpp"
#include "burau_lab/cyclotomic.hpp"
#include "burau_lab/errors.hpp"
#include "burau_lab/monodromy.hpp"

namespace burau_lab::cli {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json laurent_json(const LaurentPoly& p) {
  json j;
  if (p.is_zero()) {
    j["low"] = 0;
    j["coeffs"] = json::array();
    return j;
  }
  j["low"] = p.min_exponent();
  json coeffs = json::array();
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) coeffs.push_back(integer_json(p.coefficient(e)));
  j["coeffs"] = coeffs;
  return j;
}

json cyclo_json(const CyclotomicNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(integer_json(c));
  const auto z = x.to_complex();
  return {{"order", x.order()}, {"coeffs", coeffs}, {"approx", {z.real(), z.imag()}}};
}

template <class M, class F>
json matrix_json(const M& m, F&& entry) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json order_json(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json stratum_json(const ConeStratum& s) {
  return {{"pair", {s.i, s.j}},
          {"same_label", s.same_label},
          {"angle_fraction", to_string(s.angle_fraction)},
          {"order", order_json(s.orbifold_order)},
          {"pair_count", s.pair_count}};
}

json curvatures_json(const CurvatureVector& k) {
  json arr = json::array();
  for (const auto& f : k.fractions()) arr.push_back(to_string(f));
  return arr;
}

std::string order_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "inf";
}

std::string stratum_text(const ConeStratum* s) {
  if (s == nullptr) return "none";
  std::string out = "2pi*" + to_string(s->angle_fraction);
  out += s->orbifold_order ? " (order " + std::to_string(*s->orbifold_order) + ")"
                           : " (not an orbifold stratum)";
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BURAU_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("BURAU_LAB_SEED", std::string("not an integer: ") + env);
    }
  }
  return 0;
}

struct Emitter {
  std::ostream& out;
  bool as_json;
  json params = json::object();
  json results = json::array();
  json fixtures_matched = nullptr;
  std::string command;

  void finish() const {
    if (!as_json) return;
    json doc{{"command", command},
             {"params", params},
             {"results", results},
             {"fixtures_matched", fixtures_matched}};
    out << doc.dump(2) << "\n";
  }
};

int cmd_burau_eval(std::ostream& out, int n, const std::string& word_text,
                   std::optional<int> at_root, int numerator, bool as_json) {
  const BraidWord w = parse_word(word_text, n);
  Emitter em{out, as_json};
  em.command = "burau eval";
  em.params = {{"n", n}, {"word", word_text}, {"numerator", numerator}};
  if (at_root) em.params["at_root"] = *at_root;

  if (!at_root) {
    const BurauImage img = burau_of_word(w);
    if (as_json) {
      em.results.push_back({{"kind", "laurent"},
                            {"dim", img.matrix.dim()},
                            {"matrix", matrix_json(img.matrix, laurent_json)}});
    } else {
      out << "beta_" << n << "(" << (w.empty() ? "e" : w.to_string()) << ") over Z[t^+-1]:\n"
          << to_string(img.matrix);
    }
  } else {
    const CyclotomicNumber minus_q = minus_q_from_d(*at_root, numerator);
    const CycloMatrix m = specialized_burau(w, minus_q);
    if (as_json) {
      em.results.push_back({{"kind", "cyclotomic"},
                            {"dim", m.dim()},
                            {"minus_q", cyclo_json(minus_q)},
                            {"is_identity", is_identity(m)},
                            {"matrix", matrix_json(m, cyclo_json)}});
    } else {
      out << "t = -q = " << minus_q.to_string() << "  (q = exp(2pi i " << numerator << "/"
          << *at_root << "))\n"
          << to_string(m) << "approx:\n"
          << to_float_string(m);
    }
  }
  em.finish();
  return kOk;
}

int cmd_check_word(std::ostream& out, int n, const std::string& word_text,
                   const std::vector<int>& ds, int numerator, bool as_json) {
  const BraidWord w = parse_word(word_text, n);
  Emitter em{out, as_json};
  em.command = "burau check-word";
  em.params = {{"n", n}, {"word", word_text}, {"d", ds}, {"numerator", numerator}};
  std::vector<int> survives;
  for (int d : ds) {
    const CyclotomicNumber minus_q = minus_q_from_d(d, numerator);
    const bool member = SpecializedBurau(n, minus_q).in_kernel(w);
    if (member) survives.push_back(d);
    if (as_json) {
      em.results.push_back({{"d", d}, {"minus_q", minus_q.to_string()}, {"in_kernel", member}});
    } else {
      out << "d=" << d << "  -q=" << minus_q.to_string() << "  "
          << (member ? "in kernel" : "not in kernel") << "\n";
    }
  }
  if (!as_json) {
    out << "summary: ";
    if (survives.empty()) {
      out << "in no requested kernel\n";
    } else {
      out << "in ker beta(-q) for d in {";
      for (std::size_t i = 0; i < survives.size(); ++i) out << (i ? "," : "") << survives[i];
      out << "}\n";
    }
  }
  em.finish();
  return kOk;
}

KernelRow compute_row(int n, int d) {
  KernelRow row{n, d, true, std::nullopt};
  try {
    row.analysis = kernel_descriptor(n, d);
  } catch (const InvalidConfiguration&) {
    row.admissible = false;
  }
  return row;
}

RowAgreement agreement(const KernelRow& row, const PublishedRow& pub) {
  if (!row.analysis || !row.analysis->descriptor) return RowAgreement::mismatch;
  return compare_with_published(pub, *row.analysis->descriptor);
}

const char* agreement_name(RowAgreement a) {
  switch (a) {
    case RowAgreement::exact: return "exact";
    case RowAgreement::printed_l_multiple: return "printed_l_multiple";
    case RowAgreement::mismatch: return "mismatch";
  }
  return "mismatch";
}

const PublishedRow* find_published(int n, int d) {
  for (const auto& pub : published_kernel_table())
    if (pub.n == n && pub.d == d) return &pub;
  return nullptr;
}

int cmd_kernel_table(std::ostream& out, const std::vector<int>& ns, const std::vector<int>& ds,
                     bool as_json) {
  Emitter em{out, as_json};
  em.command = "moduli kernel-table";

  bool fixtures_ok = true;
  int exact = 0;
  std::vector<std::string> notes;
  std::vector<KernelRow> builtin;
  for (const auto& pub : published_kernel_table()) {
    builtin.push_back(compute_row(pub.n, pub.d));
    const RowAgreement a = agreement(builtin.back(), pub);
    if (a == RowAgreement::exact) ++exact;
    if (a == RowAgreement::mismatch) fixtures_ok = false;
    if (a != RowAgreement::exact) {
      std::ostringstream note;
      note << "(" << pub.n << "," << pub.d << "): printed j=" << order_text(pub.j)
           << " l=" << pub.l << ", computed ";
      if (builtin.back().analysis && builtin.back().analysis->descriptor) {
        const auto& desc = *builtin.back().analysis->descriptor;
        note << "j=" << order_text(desc.j) << " l=" << desc.l;
      } else {
        note << "nothing";
      }
      if (a == RowAgreement::printed_l_multiple)
        note << " (order of (-q)^n; the printed l is a multiple of it)";
      notes.push_back(note.str());
    }
  }
  em.fixtures_matched = fixtures_ok;

  std::vector<KernelRow> rows;
  const bool user_grid = !ns.empty() || !ds.empty();
  if (user_grid) {
    if (ns.empty() || ds.empty()) throw CLI::ValidationError("kernel-table", "--n and --d go together");
    for (int n : ns)
      for (int d : ds) rows.push_back(compute_row(n, d));
  } else {
    rows = builtin;
  }
  em.params = {{"n", ns}, {"d", ds}};

  bool any_invalid = false;
  for (const auto& row : rows) {
    if (!row.admissible) any_invalid = true;
    if (!as_json) continue;
    json r{{"n", row.n}, {"d", row.d}, {"admissible", row.admissible}};
    if (row.analysis) {
      const auto& a = *row.analysis;
      r["inconclusive"] = a.inconclusive();
      r["j"] = a.descriptor ? order_json(a.descriptor->j) : json(nullptr);
      r["l"] = a.descriptor ? json(a.descriptor->l) : json(nullptr);
      r["curvatures"] = curvatures_json(a.curvatures);
      json strata = json::array();
      for (const auto& s : a.orbifold.strata) strata.push_back(stratum_json(s));
      r["strata"] = strata;
      r["is_orbifold"] = a.orbifold.is_orbifold;
      if (row.n == 3 && a.descriptor) r["b3_l_formula"] = 2 * row.d / std::gcd(12, row.d + 6);
    }
    if (const PublishedRow* pub = find_published(row.n, row.d)) {
      r["published"] = {{"j", order_json(pub->j)},
                        {"l", pub->l},
                        {"agreement", agreement_name(agreement(row, *pub))}};
    }
    em.results.push_back(r);
  }
  if (!as_json) {
    out << render_kernel_table(rows);
    out << "published table: " << exact << "/" << published_kernel_table().size()
        << " rows exact" << (fixtures_ok ? "" : ", MISMATCH") << "\n";
    for (const auto& note : notes) out << "  " << note << "\n";
  }
  em.finish();
  if (!fixtures_ok) return kFixtureMismatch;
  return any_invalid ? kInvalidInput : kOk;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> labels;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    labels.push_back(item);
  }
  return labels;
}

int cmd_orbifold_check(std::ostream& out, const std::string& curv_text,
                       const std::string& labels_text, bool as_json) {
  const CurvatureVector k = CurvatureVector::parse(curv_text);
  std::vector<std::string> labels;
  if (labels_text.empty()) {
    for (const auto& f : k.fractions()) labels.push_back(to_string(f));
  } else {
    labels = split_labels(labels_text);
  }
  const OrbifoldReport report = orbifold_check(k, labels);
  Emitter em{out, as_json};
  em.command = "moduli orbifold-check";
  em.params = {{"curvatures", curvatures_json(k)}, {"labels", labels}};
  if (as_json) {
    json strata = json::array();
    for (const auto& s : report.strata) strata.push_back(stratum_json(s));
    em.results.push_back({{"is_orbifold", report.is_orbifold}, {"strata", strata}});
  } else {
    out << "curvatures 2pi*(" << k.to_string() << ")\n";
    for (const auto& s : report.strata) {
      out << "stratum " << labels[s.i] << "+" << labels[s.j] << " (" << s.pair_count
          << (s.pair_count == 1 ? " pair" : " pairs") << "): cone angle " << stratum_text(&s)
          << "\n";
    }
    out << (report.is_orbifold ? "orbifold" : "not an orbifold") << "\n";
  }
  em.finish();
  return kOk;
}

int cmd_monodromy_check(std::ostream& out, int n, int d, int m, int words, int max_length,
                        std::uint64_t seed, int numerator, bool as_json) {
  const CyclotomicNumber minus_q = minus_q_from_d(d, numerator);
  const DiagramAudit audit = diagram_audit(n, m, minus_q, words, max_length, seed);
  Emitter em{out, as_json};
  em.command = "monodromy check";
  em.params = {{"n", n}, {"d", d}, {"m", m}, {"words", words}, {"max_length", max_length},
               {"seed", seed}, {"numerator", numerator}};
  if (as_json) {
    em.results.push_back({{"words", audit.words}, {"passed", audit.passed},
                          {"all_passed", audit.all_passed()}});
  } else {
    out << "seed " << seed << ": ev(-q) o beta_" << n << " vs rho on " << audit.words
        << " random words (m = " << m << ", d = " << d << "): " << audit.passed << "/"
        << audit.words << " projectively equal\n";
  }
  em.finish();
  return audit.all_passed() ? kOk : kFailure;
}

int cmd_monodromy_signature(std::ostream& out, int n, int d, int m, double tol, int numerator,
                            bool as_json) {
  const CyclotomicNumber minus_q = minus_q_from_d(d, numerator);
  const MonodromyGenerators gens = rho_generators(n, m, minus_q);
  const InvariantFormResult form = invariant_hermitian_form(gens, tol);
  const Signature& s = form.chosen_signature;
  Emitter em{out, as_json};
  em.command = "monodromy signature";
  em.params = {{"n", n}, {"d", d}, {"m", m}, {"tol", tol}, {"numerator", numerator}};
  std::vector<double> ev(form.chosen_eigenvalues.data(),
                         form.chosen_eigenvalues.data() + form.chosen_eigenvalues.size());
  if (as_json) {
    em.results.push_back({{"solution_dim", form.basis.size()},
                          {"eigenvalues", ev},
                          {"signature", {s.positive, s.negative, s.zero}},
                          {"residual", form.residual}});
  } else {
    out << "invariant Hermitian forms: " << form.basis.size() << "-dimensional solution space\n";
    out << "eigenvalues:";
    for (double v : ev) out << " " << std::setprecision(12) << v;
    out << "\nsignature (pos, neg, zero) = (" << s.positive << ", " << s.negative << ", "
        << s.zero << ")  tol " << tol << "\n";
    out << "unitarity residual " << std::setprecision(3) << form.residual << "\n";
  }
  em.finish();
  return kOk;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw SyntaxError("bad integer '" + s + "' in list", 0);
    return v;
  };
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const int lo = to_int(item.substr(0, dots));
      const int hi = to_int(item.substr(dots + 2));
      if (hi < lo) throw SyntaxError("empty range '" + item + "'", 0);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(item));
    }
  }
  if (out.empty()) throw SyntaxError("empty integer list", 0);
  return out;
}

std::string render_kernel_table(const std::vector<KernelRow>& rows) {
  std::vector<std::array<std::string, 4>> cols;
  for (const auto& row : rows) {
    std::string j = "-", l = "-";
    if (row.analysis) {
      if (row.analysis->descriptor) {
        j = order_text(row.analysis->descriptor->j);
        l = std::to_string(row.analysis->descriptor->l);
      } else {
        j = l = "?";
      }
    }
    cols.push_back({std::to_string(row.n), std::to_string(row.d), j, l});
  }
  std::size_t width = 1;
  for (const auto& c : cols)
    for (const auto& s : c) width = std::max(width, s.size());

  std::ostringstream os;
  const char* names[4] = {"n", "d", "j", "l"};
  for (int r = 0; r < 4; ++r) {
    os << names[r] << " |";
    for (const auto& c : cols) os << " " << std::setw(static_cast<int>(width)) << c[r];
    os << "\n";
  }
  os << "\n";
  for (const auto& row : rows) {
    os << "(" << row.n << "," << row.d << ") ";
    if (!row.admissible) {
      os << "no admissible cone sphere\n";
      continue;
    }
    const auto& a = *row.analysis;
    os << "k = 2pi*(" << a.curvatures.to_string() << ")  sigma: " << stratum_text(a.sigma_stratum())
       << "  tau: " << stratum_text(a.tau_stratum());
    if (a.inconclusive()) os << "  INCONCLUSIVE";
    os << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burau representation at roots of unity and cone-metric orbifold analysis",
               "burau-lab"};
  app.require_subcommand(1);

  bool as_json = false;
  int n = 0, d = 0, m = 0, numerator = 1, words = 100, max_length = 20;
  std::optional<int> at_root;
  std::string word_text, d_list, n_list, curvatures, labels;
  std::uint64_t seed = 0;
  double tol = 1e-9;

  auto* burau = app.add_subcommand("burau", "Burau matrices of braid words");
  burau->require_subcommand(1);
  auto* eval = burau->add_subcommand("eval", "Print the exact Burau matrix of a word");
  eval->add_option("--n", n, "Number of strands")->required()->check(CLI::Range(2, 1000));
  eval->add_option("--word", word_text, "Braid word, e.g. \"s1 s2^-1 T3^2\"")->required();
  eval->add_option("--at-root", at_root, "Specialize at t = -q, q = exp(2 pi i a / d)");
  eval->add_option("--numerator", numerator, "Root numerator a, gcd(a, d) = 1");
  eval->add_flag("--json", as_json, "Emit JSON");

  auto* check_word = burau->add_subcommand("check-word", "Test kernel membership at roots of unity");
  check_word->add_option("--n", n, "Number of strands")->required()->check(CLI::Range(2, 1000));
  check_word->add_option("--word", word_text, "Braid word")->required();
  check_word->add_option("--d", d_list, "Root orders, e.g. 5 or 5,6 or 5..8")->required();
  check_word->add_option("--numerator", numerator, "Root numerator a");
  check_word->add_flag("--json", as_json, "Emit JSON");

  auto* moduli = app.add_subcommand("moduli", "Cone-metric moduli spaces");
  moduli->require_subcommand(1);
  auto* table = moduli->add_subcommand("kernel-table", "Kernel descriptors for (n, d)");
  table->add_option("--n", n_list, "Strand counts (list or range)");
  table->add_option("--d", d_list, "Root orders (list or range)");
  table->add_flag("--json", as_json, "Emit JSON");

  auto* orbifold = moduli->add_subcommand("orbifold-check", "Cone angles of codimension-2 strata");
  orbifold->add_option("--curvatures", curvatures, "Curvatures in units of 2pi, e.g. 1/4,1/4,2/4")
      ->required();
  orbifold->add_option("--labels", labels, "Point labels; defaults to one label per value");
  orbifold->add_flag("--json", as_json, "Emit JSON");

  auto* monodromy = app.add_subcommand("monodromy", "Monodromy of the cone-metric moduli space");
  monodromy->require_subcommand(1);
  auto* mcheck = monodromy->add_subcommand("check", "Audit ev(-q) o beta = rho on random words");
  auto* msig = monodromy->add_subcommand("signature", "Invariant Hermitian form and its signature");
  for (auto* sub : {mcheck, msig}) {
    sub->add_option("--n", n, "Number of strands")->required();
    sub->add_option("--d", d, "Root order")->required();
    sub->add_option("--m", m, "Number of cone points (default n + 1)");
    sub->add_option("--numerator", numerator, "Root numerator a");
    sub->add_flag("--json", as_json, "Emit JSON");
  }
  mcheck->add_option("--words", words, "Number of random words")->check(CLI::NonNegativeNumber);
  mcheck->add_option("--max-length", max_length, "Maximum random word length")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = mcheck->add_option("--seed", seed, "RNG seed (env BURAU_LAB_SEED sets the default)");
  msig->add_option("--tol", tol, "Relative eigenvalue zero tolerance");

  std::vector<std::string> argv_storage{"burau-lab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (seed_opt->count() == 0) seed = default_seed();
    if (m == 0) m = n + 1;
    if (*eval) return cmd_burau_eval(out, n, word_text, at_root, numerator, as_json);
    if (*check_word) return cmd_check_word(out, n, word_text, parse_int_list(d_list), numerator, as_json);
    if (*table) {
      std::vector<int> ns = n_list.empty() ? std::vector<int>{} : parse_int_list(n_list);
      std::vector<int> ds = d_list.empty() ? std::vector<int>{} : parse_int_list(d_list);
      return cmd_kernel_table(out, ns, ds, as_json);
    }
    if (*orbifold) return cmd_orbifold_check(out, curvatures, labels, as_json);
    if (*mcheck) return cmd_monodromy_check(out, n, d, m, words, max_length, seed, numerator, as_json);
    if (*msig) return cmd_monodromy_signature(out, n, d, m, tol, numerator, as_json);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidCurvatures& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidD& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidConfiguration& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidDims& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace burau_lab::cli
