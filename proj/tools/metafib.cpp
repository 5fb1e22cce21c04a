// metafib: command-line front end.
//
// Exit status: 0 success, 1 a check failed or a sequence died, 2 usage or
// I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "metafib/automata.hpp"
#include "metafib/classifier.hpp"
#include "metafib/closed_forms.hpp"
#include "metafib/io.hpp"
#include "metafib/partitions.hpp"
#include "metafib/recurrence.hpp"
#include "metafib/series.hpp"
#include "metafib/suite.hpp"

using namespace metafib;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sequence selection shared by eval, table and export table.
struct SeqArgs {
  std::string family;
  Index a = 1;
  Index b = 1;
  std::string spec;

  void attach(CLI::App* cmd) {
    auto* fam = cmd->add_option("--family", family, "h or g")->check(CLI::IsMember({"h", "g"}));
    cmd->add_option("-a", a, "first initial value")->check(CLI::PositiveNumber);
    cmd->add_option("-b", b, "second initial value")->check(CLI::PositiveNumber);
    cmd->add_option("--spec", spec, "recurrence as JSON")->excludes(fam);
  }

  bool fast() const { return spec.empty(); }

  RecurrenceSpec resolve() const {
    if (!spec.empty()) return parse_spec(spec);
    if (family.empty()) throw UsageError("give --family h|g with -a/-b, or --spec");
    return family == "h" ? h_spec(a, b) : g_spec(a, b);
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

// Values 0..n_max and the failure, if any.
SequenceTable build_table(const SeqArgs& s, Index n_max) {
  if (s.fast()) {
    SequenceTable t;
    t.spec = s.resolve();
    t.n_max = n_max;
    t.values = s.family == "h" ? h_fast_range(s.a, s.b, n_max) : g_fast_range(s.a, s.b, n_max);
    return t;
  }
  return eval_range(s.resolve(), n_max);
}

void write_table_csv(std::ostream& out, const SequenceTable& t, Index from) {
  out << "n,value\n";
  for (Index n = from; n < static_cast<Index>(t.size()); ++n)
    out << n << ',' << to_decimal(t[n]) << '\n';
}

int report_failure(const SequenceTable& t) {
  if (!t.failure) return 0;
  std::cerr << "sequence " << to_string(t.failure->kind) << " at n=" << t.failure->at << '\n';
  return 1;
}

std::string verdict_params(const Verdict& v) {
  std::ostringstream os;
  switch (v.kind) {
    case VerdictKind::EventuallyConstant:
      os << "value=" << to_decimal(v.offset);
      break;
    case VerdictKind::EventuallyAP:
      os << "s(n)=" << to_decimal(v.difference) << "n" << (sgn(v.offset) < 0 ? "" : "+")
         << to_decimal(v.offset);
      break;
    case VerdictKind::LinearRecurrence:
      os << "order=" << v.order() << " coeffs=[";
      for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        os << (i ? "," : "") << to_decimal(v.coeffs[i]);
      os << "]";
      if (v.denominator != 1) os << "/" << to_decimal(v.denominator);
      break;
    case VerdictKind::Dead:
      if (v.died_at) os << "died at n=" << *v.died_at;
      break;
    case VerdictKind::Unclassified:
      break;
  }
  return os.str();
}

void print_report(const ClassificationReport& r) {
  std::cout << "class  verdict              start  params\n";
  for (std::size_t e = 0; e < r.verdicts.size(); ++e) {
    const auto& v = r.verdicts[e];
    std::cout << std::left << std::setw(7) << e << std::setw(21) << to_string(v.kind)
              << std::setw(7) << v.start << verdict_params(v) << '\n';
  }
}

Dfao named_dfao(const std::string& name) { return name == "ptm" ? ptm_dfao() : r2n_dfao(); }

void print_dfao(const Dfao& d) {
  std::cout << "base " << d.base << ", "
            << (d.order == DigitOrder::MostSignificantFirst ? "most" : "least")
            << " significant digit first, " << d.state_count() << " states\n";
  std::cout << "state  name      out  on-0  on-1\n";
  for (std::size_t s = 0; s < d.state_count(); ++s) {
    std::cout << std::left << std::setw(7) << s << std::setw(10) << d.states[s] << std::setw(5)
              << d.outputs[s];
    for (auto t : d.transitions[s]) std::cout << std::setw(6) << t;
    std::cout << '\n';
  }
}

void emit_dfao(const Dfao& d, const std::string& name, const std::string& format,
               std::ostream& out) {
  if (format == "dot")
    out << to_dot(d, name);
  else
    out << Json(d).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meta-Fibonacci sequences: evaluation, identities, automata, classification"};
  app.require_subcommand(1);

  // eval
  SeqArgs eval_seq;
  Index eval_n = 0;
  auto* eval_cmd = app.add_subcommand("eval", "print f(n)");
  eval_seq.attach(eval_cmd);
  eval_cmd->add_option("-n", eval_n, "index")->required()->check(CLI::NonNegativeNumber);

  // table
  SeqArgs table_seq;
  Index table_from = 0, table_to = 0;
  auto* table_cmd = app.add_subcommand("table", "print n,value CSV");
  table_seq.attach(table_cmd);
  table_cmd->add_option("--from", table_from, "first index")->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--to", table_to, "last index")->required()->check(CLI::NonNegativeNumber);

  // verify
  std::string suite = "all";
  std::optional<Index> verify_nmax;
  std::optional<std::size_t> verify_order;
  bool deep = false, verify_json = false;
  std::optional<int> verify_depth;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "closed-forms|identities|series|automata|classifier|all")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--nmax", verify_nmax, "range for grids, automata and classifier tables");
  verify_cmd->add_option("--order", verify_order, "series truncation order");
  auto* deep_flag = verify_cmd->add_flag("--deep", deep, "double every default depth");
  verify_cmd->add_option("--depth", verify_depth, "scale default depths by 2^k")
      ->check(CLI::Range(0, 4))
      ->excludes(deep_flag);
  verify_cmd->add_option("--threads", threads, "worker threads (0: all cores)");
  verify_cmd->add_flag("--json", verify_json, "print the result as JSON");

  // classify
  Index cu = 1, cv = 1, c_nmax = 1000, c_split = 0;
  std::vector<std::string> c_init;
  std::string c_neg_const, c_spec;
  bool c_strict = false, c_json = false;
  ClassifyOptions c_opts;
  auto* classify_cmd = app.add_subcommand("classify", "classify residue-class subsequences");
  classify_cmd->add_option("--u", cu, "nested shift u")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--v", cv, "plain shift v")->check(CLI::PositiveNumber);
  auto* init_opt = classify_cmd->add_option("--init", c_init, "initial values, comma separated")
                       ->delimiter(',');
  auto* neg_const = classify_cmd->add_option("--neg-const", c_neg_const, "value at n <= 0");
  auto* neg_strict = classify_cmd->add_flag("--neg-strict", c_strict, "die on negative indices");
  neg_const->excludes(neg_strict);
  classify_cmd->add_option("--spec", c_spec, "recurrence as JSON")->excludes(init_opt);
  classify_cmd->add_option("--nmax", c_nmax, "table size")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--split", c_split, "modulus (default v)")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--min-tail", c_opts.min_tail, "AP confirmation length")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-order", c_opts.max_order, "largest recurrence order")
      ->check(CLI::Range(1, 64));
  classify_cmd->add_option("--window", c_opts.window, "recurrence window (default 8*max-order)")
      ->check(CLI::NonNegativeNumber);
  classify_cmd->add_flag("--json", c_json, "print the report as JSON");

  // dfao
  std::string dfao_name, dfao_format, dfao_out;
  auto* dfao_cmd = app.add_subcommand("dfao", "show or export an automaton");
  dfao_cmd->add_option("name", dfao_name, "ptm or r2n")
      ->required()
      ->check(CLI::IsMember({"ptm", "r2n"}));
  dfao_cmd->add_option("--export", dfao_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  dfao_cmd->add_option("--out", dfao_out, "write to this path instead of stdout");

  // export
  auto* export_cmd = app.add_subcommand("export", "write data files");
  export_cmd->require_subcommand(1);
  std::string out_path;
  Index bin_to = 0;
  auto* ex_bin = export_cmd->add_subcommand("bin", "binary partition counts as CSV");
  ex_bin->add_option("--to", bin_to, "last index")->required()->check(CLI::NonNegativeNumber);
  ex_bin->add_option("path", out_path)->required();

  SeqArgs ex_seq;
  Index ex_to = 0;
  auto* ex_table = export_cmd->add_subcommand("table", "sequence values as CSV or JSON");
  ex_seq.attach(ex_table);
  ex_table->add_option("--to", ex_to, "last index")->required()->check(CLI::NonNegativeNumber);
  std::string ex_format = "csv";
  ex_table->add_option("--format", ex_format)->check(CLI::IsMember({"csv", "json"}));
  ex_table->add_option("path", out_path)->required();

  std::string series_name;
  std::size_t series_order = 4096;
  Index series_b = 1;
  auto* ex_series = export_cmd->add_subcommand("series", "generating function coefficients");
  ex_series->add_option("name", series_name, "h, hb, bin, ptm, g or gb")
      ->required()
      ->check(CLI::IsMember({"h", "hb", "bin", "ptm", "g", "gb"}));
  ex_series->add_option("--order", series_order, "truncation order")->check(CLI::Range(1, 1 << 24));
  ex_series->add_option("-b", series_b, "b for hb and gb")->check(CLI::PositiveNumber);
  ex_series->add_option("path", out_path)->required();

  std::string ex_dfao_name;
  auto* ex_dfao = export_cmd->add_subcommand("dfao", "automaton as JSON");
  ex_dfao->add_option("name", ex_dfao_name)->required()->check(CLI::IsMember({"ptm", "r2n"}));
  ex_dfao->add_option("path", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) {
      if (eval_seq.fast()) {
        eval_seq.resolve();
        const BigInt v =
            eval_seq.family == "h" ? h_fast(eval_seq.a, eval_seq.b, eval_n)
                                   : g_fast(eval_seq.a, eval_seq.b, eval_n);
        std::cout << to_decimal(v) << '\n';
        return 0;
      }
      const auto r = eval(eval_seq.resolve(), eval_n);
      if (const auto* f = std::get_if<Failure>(&r)) {
        std::cout << to_string(f->kind) << " at n=" << f->at << '\n';
        return 1;
      }
      std::cout << to_decimal(std::get<BigInt>(r)) << '\n';
      return 0;
    }

    if (table_cmd->parsed()) {
      if (table_from > table_to) throw UsageError("--from exceeds --to");
      const auto t = build_table(table_seq, table_to);
      write_table_csv(std::cout, t, table_from);
      return report_failure(t);
    }

    if (verify_cmd->parsed()) {
      SuiteOptions opts;
      opts.depth = verify_depth ? *verify_depth : deep ? 1 : depth_from_env().value_or(0);
      opts.nmax = verify_nmax;
      opts.order = verify_order;
      opts.threads = threads;
      const auto result = run_suite(suite, opts);
      if (verify_json) {
        std::cout << Json(result).dump(2) << '\n';
      } else {
        std::size_t passed = 0;
        for (const auto& c : result.checks) {
          passed += c.pass;
          std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.params << "] "
                    << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms";
          if (!c.pass) std::cout << ": " << c.detail;
          std::cout << '\n';
        }
        std::cout << passed << "/" << result.checks.size() << " checks passed\n";
      }
      return result.all_pass() ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
      RecurrenceSpec spec;
      if (!c_spec.empty()) {
        spec = parse_spec(c_spec);
      } else {
        if (c_init.empty()) throw UsageError("classify needs --init or --spec");
        std::vector<BigInt> init;
        NegMode neg = NegStrict{};
        // With a constant for n <= 0, f(0) is that constant and --init
        // lists f(1), f(2), ...; in strict mode it lists f(0), f(1), ...
        if (!c_neg_const.empty()) {
          const BigInt c = parse_decimal(c_neg_const);
          init.push_back(c);
          neg = NegConstant{c};
        } else if (!c_strict) {
          throw UsageError("classify needs --neg-const c or --neg-strict");
        }
        for (const auto& s : c_init) init.push_back(parse_decimal(s));
        spec = meta_spec(cu, cv, std::move(init), neg);
      }
      const Index split = c_split ? c_split : c_spec.empty() ? cv : 1;
      const auto report = classify(spec, split, c_nmax, c_opts);
      if (c_json)
        std::cout << Json(report).dump(2) << '\n';
      else
        print_report(report);
      return 0;
    }

    if (dfao_cmd->parsed()) {
      const Dfao d = named_dfao(dfao_name);
      if (dfao_format.empty()) {
        if (!dfao_out.empty()) throw UsageError("--out needs --export json|dot");
        print_dfao(d);
        return 0;
      }
      if (dfao_out.empty()) {
        emit_dfao(d, dfao_name, dfao_format, std::cout);
      } else {
        auto out = open_out(dfao_out);
        emit_dfao(d, dfao_name, dfao_format, out);
        finish_out(out, dfao_out);
      }
      return 0;
    }

    if (ex_bin->parsed()) {
      auto out = open_out(out_path);
      write_bin_csv(out, bin_table(bin_to));
      finish_out(out, out_path);
      return 0;
    }
    if (ex_table->parsed()) {
      const auto t = build_table(ex_seq, ex_to);
      auto out = open_out(out_path);
      if (ex_format == "json")
        out << Json(t).dump() << '\n';
      else
        write_table_csv(out, t, 0);
      finish_out(out, out_path);
      return report_failure(t);
    }
    if (ex_series->parsed()) {
      auto out = open_out(out_path);
      if (series_name == "h") write_series_csv(out, h_series(series_order));
      if (series_name == "hb") write_series_csv(out, hb_series(series_b, series_order));
      if (series_name == "bin") write_series_csv(out, bin_series(series_order));
      if (series_name == "ptm") write_series_csv(out, ptm_series(series_order));
      if (series_name == "g") write_series_csv(out, g_series(series_order));
      if (series_name == "gb") write_series_csv(out, gb_series(series_b, series_order));
      finish_out(out, out_path);
      return 0;
    }
    if (ex_dfao->parsed()) {
      auto out = open_out(out_path);
      emit_dfao(named_dfao(ex_dfao_name), ex_dfao_name, "json", out);
      finish_out(out, out_path);
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "metafib: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "metafib: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "metafib: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "metafib: malformed JSON: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
