#include "regulus/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "regulus/congruence.hpp"
#include "regulus/dissection.hpp"
#include "regulus/fastseries.hpp"
#include "regulus/partitions.hpp"
#include "regulus/theta.hpp"

namespace regulus {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kDefaultExactCap = 500000;

enum class Format { json, csv, text };

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  if (f == "text") return Format::text;
  fail_validation("unknown format: " + f + " (expected json, csv, or text)");
}

// Resolves the truncation cap: flag beats REGULUS_MAX_TRUNCATION beats the
// built-in default. `explicit_cap` reports whether flag or env supplied it.
std::size_t resolve_cap(const std::optional<std::size_t>& flag,
                        std::size_t fallback, bool& explicit_cap) {
  if (flag) {
    explicit_cap = true;
    return *flag;
  }
  if (const char* env = std::getenv("REGULUS_MAX_TRUNCATION")) {
    std::size_t v = 0;
    std::istringstream is{std::string(env)};
    if (!(is >> v) || !is.eof() || v == 0)
      fail_validation("REGULUS_MAX_TRUNCATION must be a positive integer, "
                      "got \"" + std::string(env) + "\"");
    explicit_cap = true;
    return v;
  }
  explicit_cap = false;
  return fallback;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string json_scalar_to_csv(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_quote(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// Emits the report envelope. JSON carries the whole envelope; CSV and text
// carry only the result rows (timing-free by design, so they can be pinned
// or read without churn).
void emit(const ordered_json& report, Format format,
          const std::vector<std::string>& text_lines, std::ostream& out) {
  if (format == Format::json) {
    out << report.dump(2) << "\n";
    return;
  }
  if (format == Format::csv) {
    const ordered_json& rows = report.at("results");
    std::vector<std::string> columns;
    for (const ordered_json& row : rows)
      for (auto it = row.begin(); it != row.end(); ++it)
        if (std::find(columns.begin(), columns.end(), it.key()) ==
            columns.end())
          columns.push_back(it.key());
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << csv_quote(columns[i]);
    out << "\n";
    for (const ordered_json& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ",";
        auto it = row.find(columns[i]);
        out << (it == row.end() ? "" : json_scalar_to_csv(*it));
      }
      out << "\n";
    }
    return;
  }
  for (const std::string& line : text_lines) out << line << "\n";
}

std::vector<std::uint32_t> parse_range(const std::string& text,
                                       const std::string& flag) {
  auto parse_one = [&](const std::string& s) -> std::uint32_t {
    std::uint32_t v = 0;
    std::istringstream is(s);
    if (!(is >> v) || !is.eof())
      fail_validation(flag + ": expected a nonnegative integer or a range "
                      "a..b, got \"" + text + "\"");
    return v;
  };
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) return {parse_one(text)};
  std::uint32_t lo = parse_one(text.substr(0, dots));
  std::uint32_t hi = parse_one(text.substr(dots + 2));
  if (hi < lo)
    fail_validation(flag + ": range bounds out of order in \"" + text + "\"");
  if (hi - lo > 63) fail_validation(flag + ": range wider than 64 values");
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::uint32_t v = 0;
    std::istringstream ts(tok);
    if (!(ts >> v) || !ts.eof())
      fail_validation("--primes: expected a comma-separated integer list, "
                      "got \"" + text + "\"");
    out.push_back(v);
  }
  if (out.empty()) fail_validation("--primes: empty list");
  return out;
}

ordered_json envelope(const std::string& command, ordered_json params) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = ordered_json::array();
  j["timing_ms"] = 0;
  return j;
}

// (1 - q)(1 - q^2)...(1 - q^N) multiplied out term by term: the brute
// product side of the pentagonal identity, independent of euler_series.
Series brute_euler_product(std::size_t truncation) {
  std::vector<long> one(truncation + 1, 0);
  one[0] = 1;
  Series acc = make_series(one, 0);
  for (std::size_t k = 1; k <= truncation; ++k) {
    std::vector<long> factor(truncation + 1, 0);
    factor[0] = 1;
    factor[k] = -1;
    acc = mul(acc, make_series(factor, 0));
  }
  return acc;
}

struct IdentityOutcome {
  ordered_json row;
  bool pass = false;
  std::string text;
};

IdentityOutcome run_identity(const std::string& id, std::size_t n_flag,
                             std::size_t cap) {
  std::vector<std::string> parts;
  {
    std::istringstream is(id);
    std::string tok;
    while (std::getline(is, tok, ':')) parts.push_back(tok);
  }
  if (parts.empty()) fail_validation("empty identity id");
  const std::string& head = parts[0];

  auto want_parts = [&](std::size_t n) {
    if (parts.size() != n)
      fail_validation("identity id \"" + id + "\" has the wrong number of "
                      "parameters");
  };
  auto num = [&](const std::string& s, const char* what) -> std::uint64_t {
    std::uint64_t v = 0;
    std::istringstream is(s);
    if (!(is >> v) || !is.eof())
      fail_validation(std::string("identity id: ") + what +
                      " must be an integer, got \"" + s + "\"");
    return v;
  };

  std::size_t n = n_flag;
  auto default_n = [&](std::size_t d) {
    if (n == 0) n = d;
  };

  IdentityOutcome o;
  ordered_json& row = o.row;
  row["id"] = id;

  CompareResult cr;
  if (head == "euler-product") {
    want_parts(1);
    default_n(500);
    if (n > cap) fail_resource("truncation " + std::to_string(n) +
                               " exceeds the cap " + std::to_string(cap));
    cr = compare(euler_series(n), brute_euler_product(n));
  } else if (head == "jacobi-cube") {
    want_parts(1);
    default_n(500);
    if (n > cap) fail_resource("truncation exceeds the cap");
    cr = verify_jacobi_cube(n);
  } else if (head == "jtp") {
    want_parts(3);
    std::uint64_t t = num(parts[1], "t");
    int sign;
    if (parts[2] == "+1" || parts[2] == "1" || parts[2] == "+") sign = 1;
    else if (parts[2] == "-1" || parts[2] == "-") sign = -1;
    else fail_validation("identity id: sign must be +1 or -1, got \"" +
                         parts[2] + "\"");
    default_n(500);
    if (n > cap) fail_resource("truncation exceeds the cap");
    row["t"] = t;
    row["sign"] = sign;
    cr = verify_jtp(t, sign, n);
  } else if (head == "quintuple") {
    want_parts(3);
    std::uint64_t u = num(parts[1], "u"), v = num(parts[2], "v");
    default_n(500);
    if (n > cap) fail_resource("truncation exceeds the cap");
    row["u"] = u;
    row["v"] = v;
    cr = verify_quintuple(u, v, n);
  } else if (head == "ramanujan5") {
    want_parts(1);
    default_n(500);
    if (n > cap) fail_resource("truncation exceeds the cap");
    cr = ramanujan5_check(n).result;
  } else if (head == "psi-dissect" || head == "f-dissect") {
    want_parts(2);
    std::uint64_t p64 = num(parts[1], "p");
    if (p64 > 0xffffffffull) fail_validation("identity id: p out of range");
    std::uint32_t p = static_cast<std::uint32_t>(p64);
    default_n(std::max<std::size_t>(3 * std::size_t(p) * p, 600));
    if (n > cap) fail_resource("truncation exceeds the cap");
    DissectionReport rep = head == "psi-dissect" ? psi_dissection(p, n)
                                                 : f_dissection(p, n);
    row["p"] = p;
    row["n"] = n;
    row["match"] = rep.matched;
    row["class_consistent"] = rep.class_consistent;
    row["support"] = rep.support;
    row["special_class"] = rep.special_class;
    if (rep.function == DissectFunction::f_neg)
      row["special_k"] = rep.special_k;
    if (!rep.matched && !rep.comparison.match) {
      row["first_mismatch"] = rep.comparison.first_mismatch;
      row["lhs"] = rep.comparison.lhs.get_str();
      row["rhs"] = rep.comparison.rhs.get_str();
    }
    o.pass = rep.matched;
    std::ostringstream os;
    os << id << ": " << (o.pass ? "PASS" : "FAIL") << " (n=" << n << ")";
    o.text = os.str();
    return o;
  } else if (head == "bp-prime") {
    want_parts(2);
    std::uint64_t p64 = num(parts[1], "p");
    if (p64 > 0xffffffffull) fail_validation("identity id: p out of range");
    std::uint32_t p = static_cast<std::uint32_t>(p64);
    default_n(1000);
    if (n > cap) fail_resource("point count exceeds the cap");
    RelationReport rep = check_bp_prime_relation(p, n);
    row["p"] = p;
    row["n"] = n;
    row["offset"] = rep.offset;
    row["match"] = rep.match;
    row["n_checked"] = rep.n_checked;
    if (!rep.match) {
      row["witness"] = rep.witness;
      row["lhs"] = rep.lhs.get_str();
      row["rhs"] = rep.rhs.get_str();
    }
    o.pass = rep.match;
    std::ostringstream os;
    os << id << ": " << (o.pass ? "PASS" : "FAIL") << " (n=" << n << ")";
    o.text = os.str();
    return o;
  } else {
    fail_validation("unknown identity id: " + id);
  }

  row["n"] = n;
  row["match"] = cr.match;
  if (!cr.match) {
    row["first_mismatch"] = cr.first_mismatch;
    row["lhs"] = cr.lhs.get_str();
    row["rhs"] = cr.rhs.get_str();
  }
  o.pass = cr.match;
  std::ostringstream os;
  os << id << ": " << (o.pass ? "PASS" : "FAIL") << " (n=" << n << ")";
  if (!cr.match) os << " first mismatch at q^" << cr.first_mismatch;
  o.text = os.str();
  return o;
}

ordered_json scan_row(const ScanResult& r) {
  ordered_json row;
  row["origin"] = r.claim.origin;
  row["function"] = r.claim.function.name();
  row["A"] = std::to_string(r.claim.A);
  row["B"] = std::to_string(r.claim.B);
  row["m"] = r.claim.m;
  row["n_requested"] = r.n_requested;
  row["n_checked"] = r.n_checked;
  row["verified"] = r.verified;
  row["capped"] = r.capped;
  if (r.verified) {
    row["counter_n"] = nullptr;
    row["counter_argument"] = nullptr;
    row["counter_value"] = nullptr;
    row["counter_exact"] = nullptr;
    row["exact_confirmed"] = nullptr;
    row["enumeration_confirmed"] = nullptr;
  } else {
    row["counter_n"] = r.counter_n;
    row["counter_argument"] = std::to_string(r.counter_argument);
    row["counter_value"] = r.counter_value;
    row["counter_exact"] =
        r.exact_confirmed ? ordered_json(r.counter_exact) : ordered_json();
    row["exact_confirmed"] = r.exact_confirmed;
    row["enumeration_confirmed"] = r.enumeration_confirmed;
  }
  return row;
}

std::string scan_text(const ScanResult& r) {
  std::ostringstream os;
  os << r.claim.function.name() << "(" << r.claim.A << "n+" << r.claim.B
     << ") == 0 (mod " << r.claim.m << ")  [" << r.claim.origin << "]: ";
  if (r.verified) {
    os << "verified for n < " << r.n_checked;
    if (r.capped) os << " (capped by truncation)";
  } else {
    os << "COUNTEREXAMPLE at n=" << r.counter_n << ", argument "
       << r.counter_argument << ", residue " << r.counter_value;
    if (r.exact_confirmed) os << ", exact value " << r.counter_exact;
    if (r.enumeration_confirmed) os << ", confirmed by enumeration";
  }
  return os.str();
}

int cmd_expand(const std::string& spec, std::size_t n, std::uint32_t mod,
               Format format, const std::optional<std::size_t>& cap_flag,
               ordered_json& report, std::vector<std::string>& text) {
  bool explicit_cap = false;
  std::size_t cap = resolve_cap(cap_flag, kDefaultExactCap, explicit_cap);
  if (mod == 1) fail_validation("--mod must be 0 (exact) or >= 2");
  if (n > cap)
    fail_resource("truncation " + std::to_string(n) + " exceeds the cap " +
                  std::to_string(cap));
  Series s;
  if (spec == "psi") s = psi_series(n, mod);
  else if (spec == "f" || spec == "euler") s = euler_series(n, mod);
  else if (spec == "jacobi-cube") s = jacobi_cube_series(n, mod);
  else s = eta_quotient_series(EtaQuotientSpec::parse(spec), n, mod);

  report = envelope("expand", {{"spec", spec}, {"n", n}, {"mod", mod}});
  for (std::size_t i = 0; i <= n; ++i) {
    ordered_json row;
    row["n"] = i;
    row["coefficient"] = s.coeff(i).get_str();
    report["results"].push_back(std::move(row));
    text.push_back(std::to_string(i) + " " + s.coeff(i).get_str());
  }
  (void)format;
  return 0;
}

int cmd_verify_identity(const std::string& id, std::size_t n,
                        const std::optional<std::size_t>& cap_flag,
                        ordered_json& report,
                        std::vector<std::string>& text) {
  bool explicit_cap = false;
  std::size_t cap = resolve_cap(cap_flag, kDefaultExactCap, explicit_cap);
  ordered_json params = {{"id", id}};
  if (n != 0) params["n"] = n;
  IdentityOutcome o = run_identity(id, n, cap);
  report = envelope("verify-identity", std::move(params));
  report["results"].push_back(std::move(o.row));
  text.push_back(o.text);
  return o.pass ? 0 : 1;
}

int cmd_verify_family(const std::string& id,
                      const std::optional<std::uint32_t>& p,
                      const std::optional<std::string>& alpha,
                      const std::optional<std::string>& k,
                      const std::optional<std::uint32_t>& index,
                      const std::optional<std::string>& primes,
                      std::size_t count,
                      const std::optional<std::size_t>& cap_flag,
                      ordered_json& report, std::vector<std::string>& text) {
  ordered_json params = {{"id", id}};
  if (p) params["p"] = *p;
  if (alpha) params["alpha"] = *alpha;
  if (k) params["k"] = *k;
  if (index) params["index"] = *index;
  if (primes) params["primes"] = *primes;
  params["count"] = count;

  std::vector<std::optional<std::uint32_t>> alphas{std::nullopt};
  if (alpha) {
    alphas.clear();
    for (std::uint32_t a : parse_range(*alpha, "--alpha")) alphas.push_back(a);
  }
  std::vector<std::optional<std::uint32_t>> ks{std::nullopt};
  if (k) {
    ks.clear();
    for (std::uint32_t v : parse_range(*k, "--k")) ks.push_back(v);
  }

  std::vector<CongruenceClaim> claims;
  for (const auto& a : alphas)
    for (const auto& kv : ks) {
      FamilyParams fp;
      fp.catalog_id = id;
      fp.p = p;
      fp.alpha = a;
      fp.index = index;
      if (primes) fp.primes = parse_prime_list(*primes);
      fp.k = kv;
      for (CongruenceClaim& c : family_claims(fp))
        claims.push_back(std::move(c));
    }

  ScanOptions opt;
  opt.n_count = count;
  bool explicit_cap = false;
  std::size_t cap = resolve_cap(cap_flag, 0, explicit_cap);
  if (explicit_cap) {
    opt.max_truncation = cap;
    opt.explicit_cap = true;
  }

  std::vector<ScanResult> rows = verify_claims(claims, opt);
  report = envelope("verify-family", std::move(params));
  bool all = true;
  for (const ScanResult& r : rows) {
    report["results"].push_back(scan_row(r));
    text.push_back(scan_text(r));
    all = all && r.verified;
  }
  text.push_back(all ? "all claims verified" : "counterexamples found");
  return all ? 0 : 1;
}

int cmd_support(const std::optional<std::string>& function,
                const std::optional<std::string>& admissible,
                const std::optional<std::string>& cover, std::uint32_t p,
                ordered_json& report, std::vector<std::string>& text) {
  int modes = int(function.has_value()) + int(admissible.has_value()) +
              int(cover.has_value());
  if (modes != 1)
    fail_validation("support: exactly one of --function, --admissible, "
                    "--cover is required");
  if (function) {
    DissectFunction fn;
    if (*function == "psi") fn = DissectFunction::psi;
    else if (*function == "f") fn = DissectFunction::f_neg;
    else fail_validation("support: --function must be psi or f");
    std::vector<std::uint32_t> classes = support_classes(fn, p);
    std::uint32_t special =
        fn == DissectFunction::psi
            ? static_cast<std::uint32_t>(
                  (std::uint64_t(p) * p - 1) / 8 % p)
            : static_cast<std::uint32_t>(
                  (std::uint64_t(p) * p - 1) / 24 % p);
    report = envelope("support", {{"function", *function}, {"p", p}});
    ordered_json row;
    row["function"] = *function;
    row["p"] = p;
    row["support"] = classes;
    row["special_class"] = special;
    if (fn == DissectFunction::f_neg) row["special_k"] = f_special_k(p);
    report["results"].push_back(std::move(row));
    std::ostringstream os;
    os << *function << " mod " << p << ": support {";
    for (std::size_t i = 0; i < classes.size(); ++i)
      os << (i ? ", " : "") << classes[i];
    os << "}, special " << special;
    text.push_back(os.str());
    return 0;
  }
  if (admissible) {
    std::vector<std::uint32_t> js = admissible_j(*admissible, p);
    report = envelope("support", {{"admissible", *admissible}, {"p", p}});
    ordered_json row;
    row["catalog_id"] = *admissible;
    row["p"] = p;
    row["admissible_j"] = js;
    report["results"].push_back(std::move(row));
    std::ostringstream os;
    os << *admissible << " mod " << p << ": admissible j {";
    for (std::size_t i = 0; i < js.size(); ++i) os << (i ? ", " : "") << js[i];
    os << "}";
    text.push_back(os.str());
    return 0;
  }
  CoverReport cov;
  UniquenessReport uni;
  if (*cover == "b5") {
    cov = kmj_cover_check(p);
    uni = b5_uniqueness_check(p);
  } else if (*cover == "b8") {
    cov = b8_cover_check(p);
    uni = b8_uniqueness_check(p);
  } else if (*cover == "b16") {
    cov = b16_cover_check(p);
    uni = b16_uniqueness_check(p);
  } else {
    fail_validation("support: --cover must be b5, b8, or b16");
  }
  report = envelope("support", {{"cover", *cover}, {"p", p}});
  ordered_json crow;
  crow["check"] = "cover";
  crow["p"] = p;
  crow["pass"] = cov.pass;
  crow["missing"] = cov.missing;
  crow["detail"] = cov.detail;
  report["results"].push_back(std::move(crow));
  ordered_json urow;
  urow["check"] = "uniqueness";
  urow["p"] = p;
  urow["pass"] = uni.pass;
  urow["solutions"] = uni.solutions;
  urow["detail"] = uni.detail;
  report["results"].push_back(std::move(urow));
  text.push_back(cov.detail);
  text.push_back(uni.detail);
  return cov.pass && uni.pass ? 0 : 1;
}

int cmd_search(const std::string& function, std::uint32_t mod,
               std::uint64_t a_max, std::uint64_t b_max, std::size_t count,
               const std::optional<std::size_t>& cap_flag,
               ordered_json& report, std::vector<std::string>& text) {
  SearchOptions opt;
  opt.function = PartitionFunctionTag::parse(function);
  opt.m = mod;
  opt.A_max = a_max;
  opt.B_max = b_max;
  opt.n_count = count;
  bool explicit_cap = false;
  std::size_t cap = resolve_cap(cap_flag, 0, explicit_cap);
  if (explicit_cap) {
    opt.max_truncation = cap;
    opt.explicit_cap = true;
  }
  std::vector<ScanResult> hits = search_congruences(opt);
  report = envelope("search", {{"function", function},
                               {"mod", mod},
                               {"a_max", a_max},
                               {"b_max", b_max},
                               {"count", count}});
  for (const ScanResult& r : hits) {
    ordered_json row;
    row["function"] = r.claim.function.name();
    row["A"] = std::to_string(r.claim.A);
    row["B"] = std::to_string(r.claim.B);
    row["m"] = r.claim.m;
    row["n_checked"] = r.n_checked;
    row["origin"] = r.claim.origin;
    report["results"].push_back(std::move(row));
    std::ostringstream os;
    os << r.claim.function.name() << "(" << r.claim.A << "n+" << r.claim.B
       << ") == 0 (mod " << r.claim.m << ")  [n_checked=" << r.n_checked
       << "]";
    text.push_back(os.str());
  }
  if (hits.empty()) text.push_back("no congruences found");
  return 0;
}

int cmd_catalog(const std::optional<std::string>& id, ordered_json& report,
                std::vector<std::string>& text) {
  report = envelope("catalog",
                    id ? ordered_json{{"id", *id}} : ordered_json::object());
  auto push = [&](const CatalogEntry& e) {
    ordered_json row;
    row["id"] = e.id;
    row["function"] = e.function;
    row["parameters"] = e.parameters;
    row["hypotheses"] = e.hypotheses;
    row["description"] = e.description;
    row["anchor"] = e.anchor;
    if (e.stated_alpha_min >= 0) {
      row["stated_alpha_min"] = e.stated_alpha_min;
      row["shipped_alpha_min"] = e.shipped_alpha_min;
    } else {
      row["stated_alpha_min"] = nullptr;
      row["shipped_alpha_min"] = nullptr;
    }
    row["notes"] = e.notes;
    report["results"].push_back(std::move(row));
    text.push_back(e.id + " — " + e.description);
  };
  if (id) {
    const CatalogEntry* e = catalog_find(*id);
    if (!e) fail_validation("unknown catalog id: " + *id);
    push(*e);
  } else {
    for (const CatalogEntry& e : catalog()) push(e);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"regulus — truncated q-series engine and congruence verifier"};
  app.require_subcommand(1);

  std::string format_flag = "text";

  // expand
  auto* sc_expand = app.add_subcommand(
      "expand", "List coefficients of a builtin series or eta quotient");
  std::string ex_spec;
  std::size_t ex_n = 100;
  std::uint32_t ex_mod = 0;
  std::optional<std::size_t> ex_cap;
  sc_expand->add_option("--spec", ex_spec,
                        "builtin (psi, f, euler, jacobi-cube) or eta "
                        "quotient \"d^e,d^e\"")
      ->required();
  sc_expand->add_option("--n", ex_n, "truncation (largest exponent)");
  sc_expand->add_option("--mod", ex_mod, "modulus (0 = exact)");
  sc_expand->add_option("--max-truncation", ex_cap, "resource cap override");
  sc_expand->add_option("--format", format_flag, "json, csv, or text");

  // verify-identity
  auto* sc_ident = app.add_subcommand("verify-identity",
                                      "Check a classical identity exactly");
  std::string id_id;
  std::size_t id_n = 0;
  std::optional<std::size_t> id_cap;
  sc_ident->add_option("--id", id_id,
                       "euler-product | jacobi-cube | jtp:t:sign | "
                       "quintuple:u:v | ramanujan5 | psi-dissect:p | "
                       "f-dissect:p | bp-prime:p")
      ->required();
  sc_ident->add_option("--n", id_n, "truncation (0 = per-identity default)");
  sc_ident->add_option("--max-truncation", id_cap, "resource cap override");
  sc_ident->add_option("--format", format_flag, "json, csv, or text");

  // verify-family
  auto* sc_family = app.add_subcommand(
      "verify-family", "Instantiate a catalog family and scan its claims");
  std::string fa_id;
  std::optional<std::uint32_t> fa_p, fa_index, fa_family;
  std::optional<std::string> fa_alpha, fa_k, fa_primes;
  std::size_t fa_count = 200;
  std::optional<std::size_t> fa_cap;
  std::uint32_t fa_jobs = 1;
  sc_family->add_option("--id", fa_id, "catalog id")->required();
  sc_family->add_option("--p", fa_p, "prime parameter");
  sc_family->add_option("--alpha", fa_alpha, "alpha, single or range a..b");
  sc_family->add_option("--k", fa_k, "lift multiplier, single or range a..b");
  sc_family->add_option("--family", fa_family,
                        "formula number inside a multi-formula entry");
  sc_family->add_option("--index", fa_index, "residue index (i, j, or r)");
  sc_family->add_option("--primes", fa_primes,
                        "comma-separated primes, outermost first");
  sc_family->add_option("--count", fa_count, "points per claim");
  sc_family->add_option("--max-truncation", fa_cap, "resource cap override");
  sc_family->add_option("--jobs", fa_jobs, "worker count (scans are cheap; "
                        "currently sequential)");
  sc_family->add_option("--format", format_flag, "json, csv, or text");

  // support
  auto* sc_support = app.add_subcommand(
      "support", "Residue support, admissibility, and cover certificates");
  std::optional<std::string> su_function, su_admissible, su_cover;
  std::uint32_t su_p = 0;
  sc_support->add_option("--function", su_function,
                         "dissection support of psi or f");
  sc_support->add_option("--admissible", su_admissible,
                         "admissible j set of a catalog id");
  sc_support->add_option("--cover", su_cover,
                         "cover/uniqueness certificates: b5, b8, or b16");
  sc_support->add_option("--p", su_p, "prime")->required();
  sc_support->add_option("--format", format_flag, "json, csv, or text");

  // search
  auto* sc_search = app.add_subcommand(
      "search", "Empirical congruence discovery over small progressions");
  std::string se_function;
  std::uint32_t se_mod = 2;
  std::uint64_t se_amax = 20, se_bmax = 0;
  std::size_t se_count = 500;
  std::optional<std::size_t> se_cap;
  std::uint32_t se_jobs = 1;
  sc_search->add_option("--function", se_function,
                        "counting function: p, b<ell>, or bp<prime>")
      ->required();
  sc_search->add_option("--mod", se_mod, "modulus in [2, 255]");
  sc_search->add_option("--a-max", se_amax, "largest progression step A");
  sc_search->add_option("--b-max", se_bmax, "offset bound (0: only B < A)");
  sc_search->add_option("--count", se_count, "points per progression");
  sc_search->add_option("--max-truncation", se_cap, "resource cap override");
  sc_search->add_option("--jobs", se_jobs, "worker count (currently "
                        "sequential)");
  sc_search->add_option("--format", format_flag, "json, csv, or text");

  // catalog
  auto* sc_catalog =
      app.add_subcommand("catalog", "List the congruence-family catalog");
  std::optional<std::string> ca_id;
  sc_catalog->add_option("--id", ca_id, "single entry to show");
  sc_catalog->add_option("--format", format_flag, "json, csv, or text");

  std::vector<const char*> argv;
  argv.push_back("regulus");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  ordered_json report;
  std::vector<std::string> text;
  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Format format = parse_format(format_flag);
    if (app.got_subcommand(sc_expand)) {
      code = cmd_expand(ex_spec, ex_n, ex_mod, format, ex_cap, report, text);
    } else if (app.got_subcommand(sc_ident)) {
      code = cmd_verify_identity(id_id, id_n, id_cap, report, text);
    } else if (app.got_subcommand(sc_family)) {
      if (fa_family && fa_index)
        fail_validation("verify-family: give --family or --index, not both");
      std::optional<std::uint32_t> idx = fa_family ? fa_family : fa_index;
      code = cmd_verify_family(fa_id, fa_p, fa_alpha, fa_k, idx, fa_primes,
                               fa_count, fa_cap, report, text);
    } else if (app.got_subcommand(sc_support)) {
      code = cmd_support(su_function, su_admissible, su_cover, su_p, report,
                         text);
    } else if (app.got_subcommand(sc_search)) {
      code = cmd_search(se_function, se_mod, se_amax, se_bmax, se_count,
                        se_cap, report, text);
    } else if (app.got_subcommand(sc_catalog)) {
      code = cmd_catalog(ca_id, report, text);
    }
    auto stop = std::chrono::steady_clock::now();
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              stop - start)
                              .count();
    emit(report, format, text, out);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::validation ? 2 : 3;
  }
}

}  // namespace regulus
