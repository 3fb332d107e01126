// tribcensus: command-line surface over the recurrence census library.
// One structured record per line (kv or tsv), exact integers as decimal
// strings, reals as mid~radius, and a trailing manifest that makes two runs
// comparable byte for byte (only its wall_ms field may differ).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trib/basis.hpp"
#include "trib/census.hpp"
#include "trib/congeniality.hpp"
#include "trib/dyadic.hpp"
#include "trib/errors.hpp"
#include "trib/frobenius.hpp"
#include "trib/params.hpp"
#include "trib/records.hpp"
#include "trib/sequence.hpp"
#include "trib/spectral.hpp"
#include "trib/tables.hpp"
#include "trib/verify/acceptance.hpp"
#include "trib/version.hpp"

namespace {

using namespace trib;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;
constexpr int kResourceLimit = 3;

mpz_class parse_mpz(const std::string& text) {
  try {
    return mpz_class(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
}

// "p,q,r" with arbitrary-precision decimal entries.
std::vector<mpz_class> parse_triple(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_mpz(part));
  if (out.size() != 3) throw std::invalid_argument("want exactly three entries: '" + text + "'");
  return out;
}

std::string count_str(const CountResult& c) {
  return c.infinite ? "infinite" : c.value.get_str();
}

// 0.2 * eta1^{3k/2} as an outward double interval, for display next to the
// exact threshold.
Ball growth_bound_ball(const RecurrenceParams& params, long k) {
  double lo = 0, hi = 0;
  root_enclosure(params)->pow_half_interval(3 * k, lo, hi);
  return Ball::interval(0.2 * lo, 0.2 * hi);
}

// ---- subcommand bodies; each returns the process exit code ----

int cmd_basis(RecordSink& sink, const RecurrenceParams& params, long k_lo, long k_hi) {
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("basis: want 1 <= k-lo <= k-hi");
  for (long k = k_lo; k <= k_hi; ++k) {
    BasisTriple t = basis_triple(params, k);
    Record rec("basis");
    rec.put("k", k).put("p", t.p).put("q", t.q).put("r", t.r).put("sum", t.sum());
    sink.emit(rec);
  }
  return kOk;
}

int cmd_count(RecordSink& sink, const RecurrenceParams& params, long k, const mpz_class& n) {
  Record rec("count");
  rec.put("k", k).put("n", n).put("count", count_str(count_terminations(params, k, n)));
  sink.emit(rec);
  return kOk;
}

int cmd_tn(RecordSink& sink, const RecurrenceParams& params, const mpz_class& n) {
  Record rec("tn");
  rec.put("n", n).put("t", max_length(params, n));
  sink.emit(rec);
  return kOk;
}

int cmd_pn(RecordSink& sink, const RecurrenceParams& params, const mpz_class& n) {
  long t = max_length(params, n);
  Record rec("pn");
  rec.put("n", n).put("t", t).put("count", count_str(p_of_n(params, n)));
  sink.emit(rec);
  return kOk;
}

int cmd_scan(RecordSink& sink, const RecurrenceParams& params, const mpz_class& n_lo,
             const mpz_class& n_hi, int threads, bool per_n) {
  CensusSink census_sink;
  if (per_n) {
    census_sink = [&sink](const CensusRecord& r) {
      Record rec("census");
      rec.put("n", r.n).put("t", r.t_of_n).put("count", count_str(r.p));
      sink.emit(rec);
    };
  }
  ScanReport rep = scan_max_p(params, n_lo, n_hi, threads, per_n ? census_sink : nullptr);
  Record rec("scan");
  rec.put("n-lo", rep.n_lo)
      .put("n-hi", rep.n_hi)
      .put("records", rep.records)
      .put("max-count", rep.max_p)
      .put("argmax-n", rep.argmax_n)
      .put("argmax-t", rep.argmax_t)
      .put("infinite", rep.infinite_records);
  sink.emit(rec);
  for (const auto& [count, occurrences] : rep.histogram) {
    Record h("histogram");
    h.put("count", count).put("occurrences", occurrences);
    sink.emit(h);
  }
  return kOk;
}

int cmd_frobenius(RecordSink& sink, const mpz_class& p, const mpz_class& q, const mpz_class& r,
                  bool relations) {
  Record rec("frobenius");
  rec.put("p", p).put("q", q).put("r", r);
  rec.put("frobenius", apery_frobenius(p, q, r));
  mpz_class positive = positive_frobenius(p, q, r);
  rec.put("positive", positive);
  sink.emit(rec);
  if (!relations) return kOk;
  Relation rel_p = find_relation(p, q, r, Isolated::P);
  Relation rel_q = find_relation(p, q, r, Isolated::Q);
  for (const Relation& rel : {rel_p, rel_q}) {
    Record rr("relation");
    rr.put("isolated", rel.which == Isolated::P ? "p" : "q")
        .put("a", rel.a)
        .put("b", rel.b)
        .put("c", rel.c);
    sink.emit(rr);
  }
  mpz_class bound = killingbergtro_bound(p, q, r, rel_p, rel_q);
  Record br("bound");
  bool clears = bound >= positive + 1;
  br.put("value", bound).put("exceeds-positive", clears);
  sink.emit(br);
  return clears ? kOk : kVerificationFailure;
}

int cmd_threshold(RecordSink& sink, const RecurrenceParams& params, long k_lo, long k_hi) {
  if (k_lo < 4 || k_hi < k_lo) throw std::invalid_argument("threshold: want 4 <= k-lo <= k-hi");
  if (params.is_tribonacci()) {
    int exit_code = kOk;
    for (long k = k_lo; k <= k_hi; ++k) {
      ThresholdReport rep = threshold_growth_check(k);
      Record rec("threshold");
      rec.put("k", rep.k)
          .put("p", rep.p)
          .put("q", rep.q)
          .put("r", rep.r)
          .put("threshold", rep.exact_threshold)
          .put("growth-bound", growth_bound_ball(params, k))
          .put("pipeline-bound", rep.pipeline_bound)
          .put("certified", rep.certified_below);
      sink.emit(rec);
      if (!rep.certified_below) exit_code = kVerificationFailure;
    }
    return exit_code;
  }
  AffableThresholdReport rep = affable_threshold_check(params, k_lo, k_hi);
  for (const ThresholdKRecord& r : rep.records) {
    Record rec("threshold");
    rec.put("k", r.k)
        .put("p", r.triple.p)
        .put("q", r.triple.q)
        .put("r", r.triple.r)
        .put("threshold", r.threshold);
    rec.put_bound("ratio-hi", r.u_hi);
    rec.put("max-count", r.max_count)
        .put("argmax-n", r.argmax_n)
        .put("infinite", static_cast<unsigned long long>(r.infinite_counts));
    sink.emit(rec);
  }
  Record sum("threshold-summary");
  sum.put("k-lo", rep.k_lo).put("k-hi", rep.k_hi);
  sum.put_bound("max-ratio-hi", rep.max_u_hi);
  sum.put("max-count", rep.max_count);
  sink.emit(sum);
  return kOk;
}

int cmd_spectral(RecordSink& sink, const RecurrenceParams& params, bool verify_tables) {
  SpectralData s = cubic_roots(params);
  Record rec("spectral");
  rec.put("eta1", s.eta1)
      .put("eta2-re", s.eta2.re)
      .put("eta2-im", s.eta2.im)
      .put("delta", s.delta)
      .put("psi1-re", s.psi1.re)
      .put("psi1-im", s.psi1.im)
      .put("zeta1-re", s.zeta1.re)
      .put("zeta1-im", s.zeta1.im)
      .put("psi-r", s.psi_r)
      .put("zeta-r", s.zeta_r);
  sink.emit(rec);
  if (!verify_tables) return kOk;
  if (!params.is_tribonacci())
    throw std::invalid_argument("--verify-tables applies to params 1,1,1 only");
  int failures = 0;
  for (int table : {1, 2}) {
    int rows = (table == 1) ? 11 : 9;
    for (int row = 1; row <= rows; ++row) {
      Record rr("table-row");
      rr.put("table", static_cast<long>(table)).put("row", static_cast<long>(row));
      try {
        RowReport rep = verify_table_row(s, table, row);
        rr.put("k", rep.computed.k)
            .put("l", rep.computed.l)
            .put("alpha", rep.computed.alpha)
            .put("beta", rep.computed.beta)
            .put("gamma", rep.computed.gamma)
            .put("x0", rep.x0)
            .put("x1", rep.x1)
            .put("x2", rep.x2);
        rr.put_bound("worst-diff", rep.worst_diff);
        rr.put("pass", true);
      } catch (const RowMismatchError& e) {
        rr.put("pass", false);
        std::cerr << "table " << table << " row " << row << ": " << e.what() << '\n';
        ++failures;
      }
      sink.emit(rr);
    }
  }
  return failures == 0 ? kOk : kVerificationFailure;
}

int cmd_null_vector(RecordSink& sink, const RecurrenceParams& params, long n,
                    const std::string& pattern_text, const std::string& construct, long box,
                    bool terms) {
  std::optional<NullSequence> found;
  std::string source;
  if (!construct.empty()) {
    NullVariant variant;
    if (construct == "a" || construct == "A") {
      variant = NullVariant::A;
    } else if (construct == "b" || construct == "B") {
      variant = NullVariant::B;
    } else {
      throw std::invalid_argument("--construct wants a or b, got '" + construct + "'");
    }
    if (params.is_tribonacci()) {
      source = "table";
      try {
        found = patterned_null_vector(n, variant);
      } catch (const PatternViolationError& e) {
        std::cerr << e.what() << '\n';
      }
    } else {
      source = "backward-search";
      found = constructed_null_vector(params, n, variant, box);
    }
  } else {
    source = "box-search";
    found = null_vector_search(params, n, parse_sign_pattern(pattern_text), box);
  }
  Record rec("null-vector");
  rec.put("n", n).put("source", source);
  if (!found) {
    rec.put("found", false);
    sink.emit(rec);
    return kVerificationFailure;
  }
  const IntSequence& seq = found->seq;
  mpz_class norm = abs(seq.term(1));
  for (long i = 2; i <= 3; ++i)
    if (mpz_class a = abs(seq.term(i)); a > norm) norm = a;
  rec.put("found", true)
      .put("a1", seq.term(1))
      .put("a2", seq.term(2))
      .put("a3", seq.term(3))
      .put("norm", norm)
      .put("terminus", seq.terminus());
  sink.emit(rec);
  if (terms) {
    for (long i = 1; i <= seq.length(); ++i) {
      Record tr("term");
      tr.put("i", i).put("value", seq.term(i));
      sink.emit(tr);
    }
  }
  return kOk;
}

void emit_affable(RecordSink& sink, const RecurrenceParams& params) {
  AffabilityVerdict v = is_affable(params);
  Record rec("affable");
  rec.put("params", params.str())
      .put("discriminant", v.discriminant)
      .put("affable", v.affable);
  if (v.eta1) rec.put("eta1", *v.eta1);
  sink.emit(rec);
}

int cmd_affable(RecordSink& sink, const RecurrenceParams& params, bool grid) {
  if (!grid) {
    emit_affable(sink, params);
    return kOk;
  }
  for (std::int64_t a = 0; a <= 4; ++a)
    for (std::int64_t b = 0; b <= 4; ++b) {
      if (a + b < 1) continue;
      emit_affable(sink, RecurrenceParams(a, b, 1));
    }
  return kOk;
}

int cmd_probe(RecordSink& sink, const RecurrenceParams& params, const mpz_class& n_lo,
              const mpz_class& n_hi, const mpz_class& cap) {
  CongenialityProbe probe = congeniality_probe(params, n_lo, n_hi, cap);
  for (const ProbeRecord& r : probe.records) {
    Record rec("probe");
    rec.put("n", r.n).put("t", r.max_len).put("count", count_str(r.count)).put("capped", r.capped);
    sink.emit(rec);
  }
  Record sum("probe-summary");
  sum.put("n-lo", probe.n_lo)
      .put("n-hi", probe.n_hi)
      .put("max-count", probe.observed_max_count)
      .put("infinite", static_cast<unsigned long long>(probe.infinite_records))
      .put("capped", static_cast<unsigned long long>(probe.capped_records));
  sink.emit(sum);
  return kOk;
}

int cmd_noncongenial(RecordSink& sink, long t_lo, long t_hi, bool control) {
  if (t_lo < 1 || t_hi < t_lo) throw std::invalid_argument("noncongenial: want 1 <= t-lo <= t-hi");
  int exit_code = kOk;
  mpz_class prev = -1;
  for (long t = t_lo; t <= t_hi; ++t) {
    GapStatistic g = noncongenial_family(t);
    bool grew = prev < 0 || g.best_count > prev;
    Record rec("gap");
    rec.put("t", t)
        .put("length", g.length)
        .put("best-m", g.best_m)
        .put("best-count", g.best_count)
        .put("gap-limit", g.gap_limit)
        .put("grew", grew);
    sink.emit(rec);
    if (!grew) {
      std::cerr << "gap statistic did not grow at t=" << t << '\n';
      exit_code = kVerificationFailure;
    }
    prev = g.best_count;
  }
  if (!control) return exit_code;
  for (long t = t_lo; t <= t_hi; ++t) {
    GapStatistic g = length_gap_statistic(RecurrenceParams(), 3 * t + 3);
    Record rec("gap-control");
    rec.put("t", t)
        .put("length", g.length)
        .put("best-m", g.best_m)
        .put("best-count", g.best_count)
        .put("gap-limit", g.gap_limit);
    sink.emit(rec);
  }
  return exit_code;
}

int cmd_verify_all(RecordSink& sink) {
  // Human-readable progress lines go to stderr; the record stream stays
  // deterministic (per-criterion timing would break run-to-run comparison).
  std::vector<verify::CriterionResult> results = verify::run_acceptance(std::cerr);
  for (const verify::CriterionResult& r : results) {
    Record rec("criterion");
    rec.put("index", static_cast<long>(r.index)).put("label", r.label).put("pass", r.pass);
    sink.emit(rec);
  }
  return verify::all_passed(results) ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();

  CLI::App app{"census of positive cubic-recurrence sequences by terminus"};
  app.require_subcommand(1);

  std::string format_text = "kv";
  std::string output_path;
  int threads = 1;
  app.add_option("--format", format_text, "record format: kv or tsv")->capture_default_str();
  app.add_option("--output", output_path, "write records to this file instead of stdout");
  app.add_option("--threads", threads, "worker threads for scans")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));

  std::string params_text = "1,1,1";
  std::string triple_text, n_text, n_lo_text, n_hi_text, cap_text = "1000000";
  std::string pattern_text, construct_text;
  long k = 0, k_lo = 0, k_hi = 0, n_long = 0, t_lo = 1, t_hi = 3, box = 50;
  bool per_n = false, relations = false, verify_tables = false, grid = false, dump_terms = false;
  bool control = false;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--params", params_text, "recurrence coefficients a,b,c")
        ->capture_default_str();
    sub->fallthrough();
  };

  CLI::App* basis = app.add_subcommand("basis", "basis triples (p_k, q_k, r_k) over a k range");
  add_params(basis);
  basis->add_option("--k-lo", k_lo, "first length")->required();
  basis->add_option("--k-hi", k_hi, "last length (inclusive)")->required();

  CLI::App* count = app.add_subcommand("count", "f_k(n): positive length-k sequences ending at n");
  add_params(count);
  count->add_option("--k", k, "sequence length")->required();
  count->add_option("--n", n_text, "terminus")->required();

  CLI::App* tn = app.add_subcommand("tn", "t(n): maximal length with a nonzero count");
  add_params(tn);
  tn->add_option("--n", n_text, "terminus")->required();

  CLI::App* pn = app.add_subcommand("pn", "p(n): the count at maximal length");
  add_params(pn);
  pn->add_option("--n", n_text, "terminus")->required();

  CLI::App* scan = app.add_subcommand("scan-max-p", "max p(n) over an inclusive n range");
  add_params(scan);
  scan->add_option("--n-lo", n_lo_text, "first terminus")->required();
  scan->add_option("--n-hi", n_hi_text, "last terminus (inclusive)")->required();
  scan->add_flag("--per-n", per_n, "emit one census record per n");

  CLI::App* frob = app.add_subcommand("frobenius",
                                      "Frobenius numbers of a triple or of basis(params, k)");
  add_params(frob);
  frob->add_option("--triple", triple_text, "generators p,q,r (overrides --params/--k)");
  frob->add_option("--k", k, "length whose basis triple to use");
  frob->add_flag("--relations", relations, "emit isolating relations and the a*p+d*q+r bound");

  CLI::App* threshold = app.add_subcommand(
      "threshold", "largest n with f_k(n) = 0, with growth certification");
  add_params(threshold);
  threshold->add_option("--k", k, "single length (shorthand for --k-lo = --k-hi)");
  threshold->add_option("--k-lo", k_lo, "first length");
  threshold->add_option("--k-hi", k_hi, "last length (inclusive)");

  CLI::App* spectral = app.add_subcommand("spectral", "certified roots and closed-form constants");
  add_params(spectral);
  spectral->add_flag("--verify-tables", verify_tables,
                     "recompute and check every reference table row (params 1,1,1)");

  CLI::App* nullv = app.add_subcommand("null-vector",
                                       "length-n sequence terminating at 0 with a sign pattern");
  add_params(nullv);
  nullv->add_option("--n", n_long, "sequence length")->required();
  nullv->add_option("--pattern", pattern_text, "signs of the first three terms, e.g. +,0-,-");
  nullv->add_option("--construct", construct_text,
                    "use the tabulated construction, variant a or b, instead of a box search");
  nullv->add_option("--box", box, "coordinate / seed bound for the searches")
      ->capture_default_str();
  nullv->add_flag("--terms", dump_terms, "emit every term of the found sequence");

  CLI::App* affable = app.add_subcommand("affable", "c = 1 / unique-root classification");
  add_params(affable);
  affable->add_flag("--grid", grid, "classify the whole 0 <= a, b <= 4 test grid");

  CLI::App* probe = app.add_subcommand("probe", "per-n maximal length and count over a range");
  add_params(probe);
  probe->add_option("--n-lo", n_lo_text, "first terminus")->required();
  probe->add_option("--n-hi", n_hi_text, "last terminus (inclusive)")->required();
  probe->add_option("--cap", cap_text, "flag counts above this as capped")->capture_default_str();

  CLI::App* noncon = app.add_subcommand(
      "noncongenial", "gap statistic of x_n = x_{n-1} + x_{n-2} + 2 x_{n-3} at lengths 3t+3");
  noncon->add_option("--t-lo", t_lo, "first index")->capture_default_str();
  noncon->add_option("--t-hi", t_hi, "last index (inclusive)")->capture_default_str();
  noncon->add_flag("--control", control, "also emit the tribonacci statistic at the same lengths");
  noncon->fallthrough();

  CLI::App* verify = app.add_subcommand("verify-all", "run the full acceptance suite");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      std::cerr << "cannot open output file '" << output_path << "'\n";
      return kUsageError;
    }
    out = &file_out;
  }

  std::string command = "tribcensus";
  for (int i = 1; i < argc; ++i) (command += ' ') += argv[i];

  int exit_code = kOk;
  std::string params_echo;
  try {
    RecordFormat format = parse_record_format(format_text);
    RecordSink sink(*out, format);
    RecurrenceParams params = parse_params(params_text);
    params_echo = params.str();

    if (app.got_subcommand(basis)) {
      exit_code = cmd_basis(sink, params, k_lo, k_hi);
    } else if (app.got_subcommand(count)) {
      exit_code = cmd_count(sink, params, k, parse_mpz(n_text));
    } else if (app.got_subcommand(tn)) {
      exit_code = cmd_tn(sink, params, parse_mpz(n_text));
    } else if (app.got_subcommand(pn)) {
      exit_code = cmd_pn(sink, params, parse_mpz(n_text));
    } else if (app.got_subcommand(scan)) {
      exit_code = cmd_scan(sink, params, parse_mpz(n_lo_text), parse_mpz(n_hi_text), threads,
                           per_n);
    } else if (app.got_subcommand(frob)) {
      mpz_class p, q, r;
      if (!triple_text.empty()) {
        std::vector<mpz_class> gens = parse_triple(triple_text);
        p = gens[0], q = gens[1], r = gens[2];
        params_echo = triple_text;
      } else if (frob->count("--k")) {
        BasisTriple t = basis_triple(params, k);
        p = t.p, q = t.q, r = t.r;
      } else {
        throw std::invalid_argument("frobenius: want --triple p,q,r or --k");
      }
      exit_code = cmd_frobenius(sink, p, q, r, relations);
    } else if (app.got_subcommand(threshold)) {
      if (threshold->count("--k")) {
        if (threshold->count("--k-lo") || threshold->count("--k-hi"))
          throw std::invalid_argument("threshold: --k excludes --k-lo/--k-hi");
        k_lo = k_hi = k;
      } else if (!threshold->count("--k-lo") || !threshold->count("--k-hi")) {
        throw std::invalid_argument("threshold: want --k or both --k-lo and --k-hi");
      }
      exit_code = cmd_threshold(sink, params, k_lo, k_hi);
    } else if (app.got_subcommand(spectral)) {
      exit_code = cmd_spectral(sink, params, verify_tables);
    } else if (app.got_subcommand(nullv)) {
      if (pattern_text.empty() == construct_text.empty())
        throw std::invalid_argument("null-vector: want exactly one of --pattern / --construct");
      exit_code = cmd_null_vector(sink, params, n_long, pattern_text, construct_text, box,
                                  dump_terms);
    } else if (app.got_subcommand(affable)) {
      exit_code = cmd_affable(sink, params, grid);
    } else if (app.got_subcommand(probe)) {
      exit_code = cmd_probe(sink, params, parse_mpz(n_lo_text), parse_mpz(n_hi_text),
                            parse_mpz(cap_text));
    } else if (app.got_subcommand(noncon)) {
      params_echo = "1,1,2";
      exit_code = cmd_noncongenial(sink, t_lo, t_hi, control);
    } else if (app.got_subcommand(verify)) {
      exit_code = cmd_verify_all(sink);
    }

    RunManifest manifest;
    manifest.command_line = command;
    manifest.params_echo = params_echo;
    manifest.version = kVersion;
    manifest.precision = kPrecisionNote;
    manifest.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    manifest.digest = sink.digest().hex();
    manifest.records = sink.count();
    write_manifest(*out, format, manifest);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const RowMismatchError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const PatternViolationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return exit_code;
}
