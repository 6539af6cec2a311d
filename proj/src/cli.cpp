#include "calegari/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "calegari/error.hpp"
#include "calegari/json_io.hpp"
#include "calegari/report.hpp"
#include "calegari/trace_verifier.hpp"

namespace calegari::cli {

  namespace {

    using json::Json;

    struct Usage : Error {
      using Error::Error;
    };

    struct Options {
      std::string knot;
      std::optional<int> genus;
      std::optional<std::string> twists;
      std::string phi_file;
      std::string presentation_file;
      std::string trace_file;
      std::string kind = "calegari";
      SearchBudget budget;
      int lift_cap = default_lift_cap;
      bool pretty  = false;
    };

    std::string slurp(std::string const& path, std::istream& in) {
      std::ostringstream buf;
      if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
      }
      std::ifstream f(path, std::ios::binary);
      if (!f) {
        throw MalformedInput("cannot read '" + path + "'");
      }
      buf << f.rdbuf();
      return buf.str();
    }

    // Where a phi-based command takes its automorphism from.
    struct Source {
      std::optional<CatalogEntry> entry;
      std::optional<MonodromySpec> spec;
      std::optional<Automorphism> phi;

      Automorphism automorphism() const {
        if (entry) {
          return monodromy_automorphism(entry->monodromy);
        }
        if (spec) {
          return monodromy_automorphism(*spec);
        }
        return *phi;
      }
    };

    Source resolve_source(Options const& o, std::istream& in) {
      int given = (o.knot.empty() ? 0 : 1) + (o.phi_file.empty() ? 0 : 1)
                  + (o.genus || o.twists ? 1 : 0);
      if (given != 1) {
        throw Usage("give exactly one of --knot, --genus/--twists, --phi");
      }
      Source s;
      if (!o.knot.empty()) {
        s.entry = find_knot(o.knot);
        if (!s.entry) {
          throw MalformedInput("unknown knot '" + o.knot + "'");
        }
      } else if (!o.phi_file.empty()) {
        // Images only; any inverse or trace in the file is re-derived.
        Json j = json::parse(slurp(o.phi_file, in));
        auto e = json::decode_endomorphism(j);
        auto a = certify_automorphism(e);
        if (!a) {
          throw MalformedInput("images do not form a basis of F_"
                               + std::to_string(e.rank()));
        }
        s.phi = std::move(*a);
      } else {
        if (!o.genus || !o.twists) {
          throw Usage("--genus and --twists go together");
        }
        s.spec = parse_twists(*o.genus, *o.twists);
      }
      return s;
    }

    Presentation presentation_for(Options const& o, std::istream& in) {
      if (!o.presentation_file.empty()) {
        if (!o.knot.empty() || !o.phi_file.empty() || o.genus || o.twists) {
          throw Usage("--presentation excludes --knot, --genus, --phi");
        }
        Json j = json::parse(slurp(o.presentation_file, in));
        // trivialize output nests the presentation.
        if (j.is_object() && j.contains("presentation")) {
          return json::decode_presentation(j["presentation"]);
        }
        return json::decode_presentation(j);
      }
      Automorphism phi = resolve_source(o, in).automorphism();
      if (o.kind == "calegari") {
        return calegari_presentation(phi);
      }
      return handle_presentation(phi);
    }

    void emit(std::ostream& out, Json const& j, bool pretty) {
      out << (pretty ? j.dump(2) : j.dump()) << '\n';
    }

    int cmd_catalog(Options const& o, std::ostream& out) {
      Json list = Json::array();
      for (auto const& e : catalog()) {
        list.push_back(json::encode(e));
      }
      emit(out, list, o.pretty);
      return exit_ok;
    }

    int cmd_monodromy(Options const& o, std::istream& in, std::ostream& out) {
      Source s = resolve_source(o, in);
      Json j   = json::encode(s.automorphism());
      emit(out, j, o.pretty);
      return exit_ok;
    }

    int cmd_present(Options const& o, std::istream& in, std::ostream& out) {
      emit(out, json::encode(presentation_for(o, in)), o.pretty);
      return exit_ok;
    }

    int cmd_abelianize(Options const& o, std::istream& in, std::ostream& out) {
      auto inv = abelianization(presentation_for(o, in));
      if (o.pretty) {
        out << "H_1 = " << inv.to_string() << '\n';
      } else {
        emit(out, json::encode(inv), false);
      }
      return exit_ok;
    }

    int status_code(TrivializeStatus s) {
      switch (s) {
        case TrivializeStatus::trivialized:
          return exit_ok;
        case TrivializeStatus::inconclusive:
          return exit_inconclusive;
        case TrivializeStatus::certified_nontrivial:
          return exit_nontrivial;
      }
      return exit_inconclusive;
    }

    int cmd_trivialize(Options const& o, std::istream& in, std::ostream& out) {
      Presentation p = presentation_for(o, in);
      auto result    = trivialize(p, o.budget);
      if (o.pretty) {
        out << "status: " << to_string(result.status) << '\n'
            << "H_1: " << result.homology.to_string() << '\n'
            << "nodes: " << result.nodes_expanded << '\n';
        if (result.status == TrivializeStatus::trivialized) {
          out << "moves: " << result.trace.moves.size() << '\n';
        }
      } else {
        Json j;
        j["presentation"] = json::encode(p);
        j["budget"]       = json::encode(o.budget);
        Json const body = json::encode(result);
        for (auto const& [k, v] : body.items()) {
          j[k] = v;
        }
        emit(out, j, false);
      }
      return status_code(result.status);
    }

    int cmd_verify(Options const& o, std::istream& in, std::ostream& out) {
      if (o.presentation_file.empty()) {
        throw Usage("verify needs --presentation");
      }
      Json pj = json::parse(slurp(o.presentation_file, in));
      Presentation p = pj.is_object() && pj.contains("presentation")
                           ? json::decode_presentation(pj["presentation"])
                           : json::decode_presentation(pj);
      Json tj;
      if (!o.trace_file.empty()) {
        tj = o.trace_file == o.presentation_file
                 ? pj
                 : json::parse(slurp(o.trace_file, in));
      } else {
        tj = pj;
      }
      if (tj.is_object()) {
        if (!tj.contains("trace") || tj["trace"].is_null()) {
          throw MalformedInput("no trace to verify");
        }
        tj = tj["trace"];
      }
      TrivializationTrace trace = json::decode_trace(tj);
      TraceVerdict v            = verify_trace(p, trace);
      if (o.pretty) {
        out << "verified: " << (v.ok ? "true" : "false") << '\n';
        if (!v.ok) {
          out << "failing move: " << v.failing_index.value_or(0) << '\n'
              << "reason: " << v.reason << '\n';
        }
      } else {
        Json j;
        j["verified"]      = v.ok;
        j["moves"]         = trace.moves.size();
        j["failing_index"] = v.ok ? Json(nullptr) : Json(v.failing_index.value_or(0));
        j["reason"]        = v.ok ? Json(nullptr) : Json(v.reason);
        emit(out, j, false);
      }
      return v.ok ? exit_ok : exit_malformed;
    }

    int cmd_certify(Options const& o, std::istream& in, std::ostream& out) {
      Source s = resolve_source(o, in);
      CertifyOptions co{o.budget, o.lift_cap};
      Certificate c = s.entry  ? certify(*s.entry, co)
                      : s.spec ? certify(*s.spec, co)
                               : certify(*s.phi, co);
      if (o.pretty) {
        out << "input: " << c.input.kind;
        if (!c.input.name.empty()) {
          out << ' ' << c.input.name;
        }
        out << '\n'
            << "rank: " << c.rank << (c.geometric ? " (geometric)" : "") << '\n'
            << "det(A - I): " << c.det_A_minus_I << '\n'
            << "H_1: " << c.abelianization.to_string() << '\n';
        if (c.alexander) {
          out << "alexander: " << c.alexander->to_string() << '\n';
        }
        out << "handle presentation reduces to calegari presentation: "
            << (c.handle_matches_calegari ? "yes" : "no") << '\n'
            << "trivialization: " << to_string(c.trivialization.status);
        if (c.trivialization.status == TrivializeStatus::trivialized) {
          out << ", " << c.trivialization.trace.moves.size() << " moves, "
              << (c.trivialization.verified ? "verified" : "NOT verified");
        }
        out << '\n';
        if (c.lift_count) {
          out << "lifts: " << *c.lift_count << '\n';
        }
        out << "conclusion: " << to_string(c.conclusion) << '\n';
        for (auto k : c.also_applies) {
          out << "also: " << to_string(k) << '\n';
        }
      } else {
        emit(out, json::encode(c), false);
      }
      switch (c.conclusion) {
        case Conclusion::not_a_calegari_datum:
          return exit_nontrivial;
        case Conclusion::inconclusive:
          return exit_inconclusive;
        default:
          return exit_ok;
      }
    }

    void add_source(CLI::App* cmd, Options& o) {
      cmd->add_option("--knot", o.knot, "catalog knot name");
      cmd->add_option("--genus", o.genus, "fiber genus for --twists");
      cmd->add_option("--twists", o.twists, "twist word, e.g. \"1 2:-1\"");
      cmd->add_option("--phi", o.phi_file, "automorphism JSON file ('-' = stdin)");
    }

    void add_budget(CLI::App* cmd, Options& o) {
      cmd->add_option("--max-relator-length", o.budget.max_relator_length,
                      "longest relator kept during search");
      cmd->add_option("--max-generators", o.budget.max_generators,
                      "most generators allowed during search");
      cmd->add_option("--node-limit", o.budget.node_limit,
                      "search states stored before giving up");
      cmd->add_option("--seed", o.budget.seed, "tie-break seed");
    }

    void add_presentation(CLI::App* cmd, Options& o) {
      cmd->add_option("--presentation", o.presentation_file,
                      "presentation JSON file ('-' = stdin)");
      cmd->add_option("--kind", o.kind, "calegari or handle")
          ->check(CLI::IsMember({"calegari", "handle"}));
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream& in,
          std::ostream& out,
          std::ostream& err) {
    Options o;
    CLI::App app{"Presentations and certificates for Calegari spheres of "
                 "fibered knots",
                 "calegari"};
    app.require_subcommand(1);
    app.add_flag("--pretty", o.pretty, "human-readable output");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the knot catalog");
    auto* mono_cmd
        = app.add_subcommand("monodromy", "automorphism of a monodromy");
    add_source(mono_cmd, o);
    auto* present_cmd = app.add_subcommand("present", "emit a presentation");
    add_source(present_cmd, o);
    add_presentation(present_cmd, o);
    auto* ab_cmd = app.add_subcommand("abelianize", "abelian invariants of H_1");
    add_source(ab_cmd, o);
    add_presentation(ab_cmd, o);
    auto* triv_cmd
        = app.add_subcommand("trivialize", "search for a trivializing trace");
    add_source(triv_cmd, o);
    add_presentation(triv_cmd, o);
    add_budget(triv_cmd, o);
    auto* verify_cmd = app.add_subcommand("verify", "replay a trace");
    verify_cmd->add_option("--presentation", o.presentation_file,
                           "presentation or trivialize output ('-' = stdin)");
    verify_cmd->add_option("--trace", o.trace_file,
                           "trace JSON (default: the presentation file)");
    auto* cert_cmd = app.add_subcommand("certify", "full certificate");
    add_source(cert_cmd, o);
    add_budget(cert_cmd, o);
    cert_cmd->add_option("--lift-cap", o.lift_cap, "largest rank for lifts");
    for (auto* cmd : app.get_subcommands({})) {
      cmd->add_flag("--pretty", o.pretty, "human-readable output");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "calegari: " << e.what() << '\n';
      return exit_usage;
    }

    try {
      validate(o.budget);
      if (o.lift_cap < 0) {
        throw Usage("--lift-cap must be nonnegative");
      }
      if (catalog_cmd->parsed()) {
        return cmd_catalog(o, out);
      }
      if (mono_cmd->parsed()) {
        return cmd_monodromy(o, in, out);
      }
      if (present_cmd->parsed()) {
        return cmd_present(o, in, out);
      }
      if (ab_cmd->parsed()) {
        return cmd_abelianize(o, in, out);
      }
      if (triv_cmd->parsed()) {
        return cmd_trivialize(o, in, out);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(o, in, out);
      }
      if (cert_cmd->parsed()) {
        return cmd_certify(o, in, out);
      }
    } catch (Usage const& e) {
      err << "calegari: " << e.what() << '\n';
      return exit_usage;
    } catch (LimitError const& e) {
      err << "calegari: " << e.what() << '\n';
      return exit_usage;
    } catch (Error const& e) {
      err << "calegari: " << e.what() << '\n';
      return exit_malformed;
    } catch (nlohmann::json::exception const& e) {
      err << "calegari: " << e.what() << '\n';
      return exit_malformed;
    }
    return exit_usage;
  }

}  // namespace calegari::cli
