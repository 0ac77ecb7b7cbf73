#include "cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"

#include "reslat/catalog.hpp"
#include "reslat/dot.hpp"
#include "reslat/filters.hpp"
#include "reslat/gelfand.hpp"
#include "reslat/io.hpp"
#include "reslat/modelgen.hpp"
#include "reslat/pure.hpp"
#include "reslat/report.hpp"

namespace reslat::cli {

namespace {

struct Options {
  std::string algebra;
  std::string output;
  bool verbose = false;
  bool spectrum = false;
  bool chains = false;
  bool list = false;
  std::size_t min_size = 1;
  std::size_t max_size = 6;
  unsigned threads = 0;
  std::string dump;
  std::string show;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_criteria(const Battery& b, std::ostream& out) {
  for (const auto& c : b) {
    out << "  " << c.group << "/" << c.key << ": " << yes_no(c.holds);
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << '\n';
  }
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const auto a = load_algebra(o.algebra);
    out << a.name() << ": valid residuated lattice, " << a.size() << " elements\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << o.algebra << ": " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << o.algebra << ": " << e.what() << '\n';
  }
  return kExitFalse;
}

int cmd_filters(const Options& o, std::ostream& out) {
  const FilterLattice fl(load_algebra(o.algebra));
  out << fl.algebra().name() << ": " << fl.size() << " filters\n";
  for (ElementSet f : fl.filters()) out << format_set(fl.algebra(), f) << '\n';
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const FilterLattice fl(load_algebra(o.algebra));
  const auto& a = fl.algebra();
  out << a.name() << ": " << fl.primes().size() << " prime filters, " << fl.maximals().size()
      << " maximal\n";
  for (ElementSet m : fl.maximals()) out << "maximal " << format_set(a, m) << '\n';
  for (ElementSet p : fl.primes()) out << "prime " << format_set(a, p) << '\n';
  return kExitOk;
}

int cmd_gelfand(const Options& o, std::ostream& out) {
  const FilterLattice fl(load_algebra(o.algebra));
  const PureStructure ps(fl);
  const GelfandVerdict v = gelfand_verdict(ps);
  const auto& a = fl.algebra();
  const std::size_t groups = kGelfandGroups.size();
  if (!v.unanimous()) {
    out << "Gelfand: violation (definition says " << yes_no(v.gelfand()) << ", "
        << v.dissenters().size() << " dissenting criteria)\n";
    for (const Criterion* c : v.dissenters()) out << "  dissent " << c->group << "/" << c->key << '\n';
    return kExitViolation;
  }
  out << "Gelfand: " << yes_no(v.gelfand()) << " (" << v.groups_holding() << "/" << groups
      << " criteria)\n";
  if (v.witness_prime) {
    out << "witness prime " << format_set(a, *v.witness_prime) << " under";
    for (ElementSet m : v.witness_maximals) out << ' ' << format_set(a, m);
    out << '\n';
  }
  if (v.contessa_pair) {
    out << "witness pair " << a.name_of(v.contessa_pair->first) << "*"
        << a.name_of(v.contessa_pair->second) << "=0\n";
  }
  if (o.verbose) print_criteria(v.criteria, out);
  return v.gelfand() ? kExitOk : kExitFalse;
}

int cmd_pure(const Options& o, std::ostream& out) {
  const FilterLattice fl(load_algebra(o.algebra));
  const PureStructure ps(fl);
  const auto& a = fl.algebra();
  auto list = [&](const char* title, std::span<const ElementSet> sets) {
    out << title << " (" << sets.size() << "):";
    for (ElementSet s : sets) out << ' ' << format_set(a, s);
    out << '\n';
  };
  list("pure filters", ps.pure_filters());
  list("purely-maximal", ps.purely_maximal());
  list("pure spectrum", ps.spp());

  const GelfandVerdict v = gelfand_verdict(ps);
  Battery b;
  for (const auto& c : v.criteria) {
    if (c.group == "unique-maximal" || c.group == "d-topology" || c.group == "pure-spectrum" ||
        c.group == "unit-part" || c.group == "pure-part" || c.group == "rho-rad-adjunction") {
      b.push_back(c);
    }
  }
  const std::size_t agree = static_cast<std::size_t>(std::count_if(
      b.begin(), b.end(), [&](const Criterion& c) { return c.holds == v.gelfand(); }));
  if (!unanimous(b)) {
    out << "Pure characterizations: violation (" << agree << "/" << b.size()
        << " agree with the definition)\n";
    print_criteria(b, out);
    return kExitViolation;
  }
  out << "Pure characterizations: Gelfand " << yes_no(v.gelfand()) << " (" << b.size() << "/"
      << b.size() << " criteria agree)\n";
  if (o.verbose) print_criteria(b, out);
  return v.gelfand() ? kExitOk : kExitFalse;
}

int cmd_soft(const Options& o, std::ostream& out) {
  const FilterLattice fl(load_algebra(o.algebra));
  const SoftConditions s = soft_conditions(fl);
  const Battery h = hausnorm_battery(fl);
  const int held = s.definition + s.hausdorff_dense + s.gelfand_semisimple;
  if (!s.unanimous() || !unanimous(h)) {
    out << "Soft: violation (" << held << "/3 conditions hold)\n";
    out << "  definition: " << yes_no(s.definition) << '\n';
    out << "  hausdorff-dense: " << yes_no(s.hausdorff_dense) << '\n';
    out << "  gelfand-semisimple: " << yes_no(s.gelfand_semisimple) << '\n';
    print_criteria(h, out);
    return kExitViolation;
  }
  out << "Soft: " << yes_no(s.definition) << " (" << held << "/3 conditions)\n";
  out << "Max spectrum Hausdorff: " << yes_no(h.front().holds) << " ("
      << std::count_if(h.begin(), h.end(), [](const Criterion& c) { return c.holds; }) << "/"
      << h.size() << " conditions)\n";
  if (o.verbose) print_criteria(h, out);
  return s.definition ? kExitOk : kExitFalse;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  EnumerationTask task;
  task.min_size = o.min_size;
  task.max_size = o.max_size;
  task.backbone = o.chains ? Backbone::Chains : Backbone::All;
  task.threads = o.threads;
  if (task.min_size < 1 || task.min_size > task.max_size) {
    err << "search: need 1 <= --min-size <= --max-size\n";
    return kExitUsage;
  }
  try {
    const Classification c = classify_all(task);
    if (o.list) {
      for (const auto& r : c.reports) {
        out << r.name << " size=" << r.size << " gelfand=" << yes_no(r.flags.gelfand)
            << " soft=" << yes_no(r.flags.soft) << " local=" << yes_no(r.flags.local)
            << " semisimple=" << yes_no(r.flags.semisimple) << " prelinear="
            << yes_no(r.flags.prelinear) << '\n';
      }
    }
    const auto& k = c.counts;
    out << "models: " << k.models << '\n'
        << "gelfand: " << k.gelfand << '\n'
        << "soft: " << k.soft << '\n'
        << "local: " << k.local << '\n'
        << "semisimple: " << k.semisimple << '\n'
        << "rickart: " << k.rickart << '\n'
        << "baer: " << k.baer << '\n'
        << "prelinear: " << k.prelinear << '\n'
        << "prelinear-not-gelfand: " << k.prelinear_not_gelfand << '\n';
    return kExitOk;
  } catch (const EquivalenceViolation& e) {
    err << e.what() << '\n';
    if (!o.dump.empty()) {
      write_file(o.dump, e.algebra_dump());
      err << "counterexample written to " << o.dump << '\n';
    } else {
      err << e.algebra_dump();
    }
    return kExitViolation;
  }
}

int cmd_report(const Options& o, std::ostream& out) {
  emit(o, report_json(analyze(load_algebra(o.algebra))), out);
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const auto a = load_algebra(o.algebra);
  emit(o, o.spectrum ? spectrum_dot(FilterLattice(a)) : hasse_dot(a), out);
  return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.show.empty()) {
    auto a = catalog_lookup(o.show);
    if (!a) {
      err << "catalog: no built-in algebra named " << o.show << '\n';
      return kExitUsage;
    }
    emit(o, serialize_text(*a), out);
    return kExitOk;
  }
  for (const auto& a : catalog_all()) out << a.name() << ' ' << a.size() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite residuated lattices: filters, spectra, Gelfand and pure batteries",
               "reslat"};
  app.require_subcommand(1);
  Options o;

  auto algebra_arg = [&](CLI::App* sub) {
    sub->add_option("algebra", o.algebra, "Catalog name or algebra file (text or JSON)")
        ->required();
  };
  auto* check = app.add_subcommand("check", "Validate an algebra");
  algebra_arg(check);
  auto* filters = app.add_subcommand("filters", "List all filters in canonical order");
  algebra_arg(filters);
  auto* spectrum = app.add_subcommand("spectrum", "List maximal and prime filters");
  algebra_arg(spectrum);
  auto* gelfand = app.add_subcommand("gelfand", "Run the Gelfand criteria");
  algebra_arg(gelfand);
  gelfand->add_flag("-v,--verbose", o.verbose, "Print every criterion");
  auto* pure = app.add_subcommand("pure", "Pure filters, pure spectrum and pure criteria");
  algebra_arg(pure);
  pure->add_flag("-v,--verbose", o.verbose, "Print every criterion");
  auto* soft = app.add_subcommand("soft", "Run the soft and Hausdorff-maximal conditions");
  algebra_arg(soft);
  soft->add_flag("-v,--verbose", o.verbose, "Print every criterion");
  auto* search = app.add_subcommand("search", "Enumerate and classify small algebras");
  search->add_option("--min-size", o.min_size, "Smallest carrier")->capture_default_str();
  search->add_option("--max-size", o.max_size, "Largest carrier")->capture_default_str();
  search->add_flag("--chains", o.chains, "Only chains as lattice backbone");
  search->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  search->add_flag("--list", o.list, "Print one line per model");
  search->add_option("--dump", o.dump, "Write a counterexample to this file");
  auto* report = app.add_subcommand("report", "Full analysis report as JSON");
  algebra_arg(report);
  report->add_option("-o,--output", o.output, "Output file");
  auto* dot = app.add_subcommand("export-dot", "Hasse diagram or spectrum as DOT");
  algebra_arg(dot);
  dot->add_flag("--spectrum", o.spectrum, "Specialization order of the prime spectrum");
  dot->add_option("-o,--output", o.output, "Output file");
  auto* catalog = app.add_subcommand("catalog", "List built-in algebras");
  catalog->add_option("--show", o.show, "Print a built-in algebra in the text format");
  catalog->add_option("-o,--output", o.output, "Output file for --show");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out, err);
    if (*filters) return cmd_filters(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*gelfand) return cmd_gelfand(o, out);
    if (*pure) return cmd_pure(o, out);
    if (*soft) return cmd_soft(o, out);
    if (*search) return cmd_search(o, out, err);
    if (*report) return cmd_report(o, out);
    if (*dot) return cmd_export_dot(o, out);
    if (*catalog) return cmd_catalog(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoErr;
  } catch (const ParseError& e) {
    err << o.algebra << ": " << e.what() << '\n';
    return kExitDataErr;
  } catch (const ValidationError& e) {
    err << o.algebra << ": " << e.what() << '\n';
    return kExitDataErr;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EquivalenceViolation& e) {
    err << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataErr;
  }
  return kExitUsage;
}

}  // namespace reslat::cli
