#include "xnerve/cli.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "xnerve/fillers.hpp"
#include "xnerve/group.hpp"
#include "xnerve/homotopy.hpp"
#include "xnerve/simplicial.hpp"

namespace xnerve {

  namespace {

    using ojson = nlohmann::ordered_json;

    struct Report {
      int                status = kPass;
      std::ostringstream text;
      ojson              json = ojson::object();

      void fail(int s) {
        if (status == kPass) {
          status = s;
        }
      }
    };

    int parse_int(std::string_view s) {
      int  v   = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 0) {
        throw std::invalid_argument("not a non-negative integer: '"
                                    + std::string(s) + "'");
      }
      return v;
    }

    std::pair<int, int> dims_or(CommandOptions const& o, int lo, int hi) {
      return o.dims ? *o.dims : std::pair{lo, hi};
    }

    ojson witness_json(std::vector<std::uint32_t> const& w) {
      return ojson(w);
    }

    ojson horn_json(NerveProvider const& p, Horn const& h,
                    std::string* line = nullptr) {
      ojson faces = ojson::array();
      ojson corners = ojson::array();
      std::string s = "(";
      for (int i = 0; i <= h.dim; ++i) {
        s += i ? ", " : "";
        if (i == h.omitted) {
          faces.push_back(nullptr);
          corners.push_back(nullptr);
          s += "-";
          continue;
        }
        auto c = p.cell(h.dim - 1, h.faces[i]);
        faces.push_back(to_text(c));
        if (c.dim() >= 2) {
          corners.push_back(c.entry(1, c.dim()).value);
        }
        s += "[" + to_text(c) + "]";
      }
      if (line) {
        *line = s + ")";
      }
      ojson j;
      j["dim"]     = h.dim;
      j["omitted"] = h.omitted;
      j["faces"]   = faces;
      if (h.dim >= 3) {
        j["corners"] = corners;
      }
      return j;
    }

    CellHorn to_cells(NerveProvider const& p, Horn const& h) {
      CellHorn out{h.dim, h.omitted, std::vector<NerveCell>(h.faces.size())};
      for (int i = 0; i <= h.dim; ++i) {
        if (i != h.omitted) {
          out.faces[i] = p.cell(h.dim - 1, h.faces[i]);
        }
      }
      return out;
    }

    std::string group_line(GroupPresentation const& g) {
      return order_profile_tag(g) + " (order " + std::to_string(g.order())
             + ")";
    }

    ojson group_json(GroupPresentation const& g) {
      ojson j;
      j["order"]   = g.order();
      j["abelian"] = is_abelian(g);
      j["tag"]     = order_profile_tag(g);
      j["labels"]  = g.labels;
      ojson rows   = ojson::array();
      for (std::size_t a = 0; a < g.order(); ++a) {
        std::vector<std::size_t> r;
        for (std::size_t b = 0; b < g.order(); ++b) {
          r.push_back(g.mul(a, b));
        }
        rows.push_back(r);
      }
      j["table"] = rows;
      return j;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    void cmd_validate(CrossedMonoid const& xm, Report& r) {
      auto  v = validate_crossed_monoid(xm);
      ojson list = ojson::array();
      for (auto const& x : v.violations) {
        ojson j;
        j["axiom"]   = x.axiom;
        j["statement"] = std::string(axiom_description(x.axiom));
        j["witness"] = witness_json(x.witness);
        j["detail"]  = x.detail;
        list.push_back(j);
        r.text << "  FAIL " << x.axiom << " witness "
               << witness_json(x.witness).dump() << ": " << x.detail << "\n";
      }
      r.json["passed"]     = v.passed();
      r.json["violations"] = list;
      if (v.passed()) {
        r.text << "  all crossed monoid axioms hold\n";
      } else {
        r.fail(kProperty);
      }
    }

    void cmd_classify(CrossedMonoid const& xm, Report& r) {
      auto c     = classify_structure(xm);
      auto flags = {std::pair{"groupoid", c.is_groupoid},
                    std::pair{"fibers-groups", c.fibers_are_groups},
                    std::pair{"fibers-cancellative", c.fibers_cancellative},
                    std::pair{"action-injective", c.action_injective},
                    std::pair{"crossed-module", c.is_crossed_module}};
      ojson f;
      for (auto [name, on] : flags) {
        f[name] = on;
        r.text << "  " << name << ": " << (on ? "yes" : "no") << "\n";
      }
      ojson w = ojson::array();
      for (auto const& x : c.witnesses) {
        w.push_back({{"flag", x.axiom},
                     {"witness", witness_json(x.witness)},
                     {"detail", x.detail}});
        r.text << "  " << x.axiom << " fails at " << witness_json(x.witness).dump()
               << ": " << x.detail << "\n";
      }
      r.json["flags"]     = f;
      r.json["witnesses"] = w;
    }

    void cmd_enumerate(CrossedMonoid const& xm, CommandOptions const& o,
                       Report& r) {
      auto [lo, hi] = dims_or(o, 0, 2);
      ojson levels  = ojson::array();
      for (int n = lo; n <= hi; ++n) {
        auto  cells = enumerate(xm, n, o.max_cells);
        ojson list  = ojson::array();
        for (auto const& c : cells) {
          list.push_back(to_text(c));
        }
        levels.push_back({{"dim", n}, {"count", cells.size()}, {"cells", list}});
        r.text << "  N_" << n << ": " << cells.size() << " cells\n";
        if (cells.size() <= 32) {
          for (auto const& c : cells) {
            r.text << "    " << to_text(c) << "\n";
          }
        }
      }
      r.json["levels"] = levels;
    }

    void cmd_audit(CrossedMonoid const& xm, CommandOptions const& o,
                   Report& r) {
      int           hi = dims_or(o, 0, 3).second;
      NerveProvider p(xm, hi + 1);
      auto          v = audit_simplicial(p, hi, o.max_cells);
      ojson         list = ojson::array();
      for (auto const& x : v.violations) {
        list.push_back({{"identity", x.axiom},
                        {"witness", witness_json(x.witness)},
                        {"detail", x.detail}});
        r.text << "  FAIL " << x.axiom << " at (n, c, j, k) = "
               << witness_json(x.witness).dump() << ": " << x.detail << "\n";
      }
      r.json["max_dim"]    = hi;
      r.json["passed"]     = v.passed();
      r.json["violations"] = list;
      if (v.passed()) {
        r.text << "  simplicial identities hold up to dimension " << hi << "\n";
      } else {
        r.fail(kProperty);
      }
    }

    void cmd_coskeletal(CrossedMonoid const& xm, CommandOptions const& o,
                        Report& r) {
      auto [lo, hi] = dims_or(o, 4, 5);
      if (lo < 1) {
        throw std::invalid_argument("coskeletal dimensions start at 1");
      }
      NerveProvider p(xm, hi);
      auto          rep    = check_coskeletal(p, lo - 1, hi, o.max_cells);
      ojson         levels = ojson::array();
      for (auto const& l : rep.levels) {
        ojson j{{"dim", l.dim},         {"cells", l.cells},
                {"kernel", l.kernel},   {"image", l.image},
                {"injective", l.injective}, {"surjective", l.surjective}};
        r.text << "  b_" << l.dim << ": " << l.cells << " cells, kernel "
               << l.kernel << ", image " << l.image
               << (l.injective && l.surjective ? ", bijective" : "") << "\n";
        if (l.collision) {
          auto [a, b]    = *l.collision;
          j["collision"] = {to_text(p.cell(l.dim, a)), to_text(p.cell(l.dim, b))};
          r.text << "    not injective: [" << to_text(p.cell(l.dim, a))
                 << "] and [" << to_text(p.cell(l.dim, b))
                 << "] share a boundary\n";
        }
        if (l.missing) {
          ojson faces = ojson::array();
          for (auto f : l.missing->faces) {
            faces.push_back(to_text(p.cell(l.dim - 1, f)));
          }
          j["missing"] = faces;
          r.text << "    not surjective: " << faces.dump() << "\n";
        }
        levels.push_back(j);
      }
      r.json["levels"]    = levels;
      r.json["bijective"] = rep.bijective();
      if (!rep.bijective()) {
        r.fail(kProperty);
      }
    }

    void cmd_kan(CrossedMonoid const& xm, CommandOptions const& o, Report& r) {
      auto [lo, hi] = dims_or(o, 1, 3);
      NerveProvider p(xm, hi);
      auto          rep    = check_kan(p, hi, std::max(lo, 1), o.max_cells);
      ojson         levels = ojson::array();
      for (auto const& l : rep.levels) {
        levels.push_back({{"dim", l.dim},
                          {"omitted", l.omitted},
                          {"horns", l.horns},
                          {"fillable", l.fillable}});
        r.text << "  horns of dim " << l.dim << " missing " << l.omitted
               << ": " << l.horns << (l.fillable ? ", all fill" : ", UNFILLABLE")
               << "\n";
      }
      r.json["levels"] = levels;
      r.json["kan"]    = rep.kan();
      if (auto const* f = rep.first_failure()) {
        std::string line;
        r.json["witness"] = horn_json(p, *f->witness, &line);
        r.text << "  witness horn " << line << "\n";
        r.fail(kProperty);
      }
    }

    // Horns to fill at (n, l): all of them, or `count` horns of uniformly
    // random n-cells when a seed is given.
    std::vector<Horn> fill_targets(NerveProvider const& p, int n, int l,
                                   CommandOptions const& o,
                                   std::mt19937_64& rng) {
      if (!o.seed) {
        return horns(p, n, l, o.max_cells);
      }
      std::vector<Horn> out;
      std::uniform_int_distribution<CellIndex> pick(0, p.count(n) - 1);
      for (int i = 0; i < 1000; ++i) {
        out.push_back(horn(p, n, l, pick(rng)));
      }
      return out;
    }

    void cmd_fill(CrossedMonoid const& xm, CommandOptions const& o, Report& r) {
      auto cm       = CrossedModule::from(xm);
      auto [lo, hi] = dims_or(o, 2, 4);
      if (lo < 1) {
        throw std::invalid_argument("horns start in dimension 1");
      }
      NerveProvider  p(xm, hi);
      std::mt19937_64 rng(o.seed.value_or(0));
      ojson          levels = ojson::array();
      r.json["sampled"]     = o.seed.has_value();
      for (int n = lo; n <= hi; ++n) {
        for (int l = 0; l <= n; ++l) {
          auto          hs     = fill_targets(p, n, l, o, rng);
          std::uint64_t filled = 0;
          ojson         j{{"dim", n}, {"omitted", l}, {"horns", hs.size()}};
          for (auto const& h : hs) {
            try {
              auto res = fill_horn(cm, to_cells(p, h));
              (void)res;
              ++filled;
            } catch (FillerError const& e) {
              std::string line;
              j["witness"] = horn_json(p, h, &line);
              j["error"]   = e.what();
              r.text << "  FAIL dim " << n << " missing " << l << " at "
                     << line << ": " << e.what() << "\n";
              r.fail(kProperty);
              break;
            }
          }
          j["filled"] = filled;
          levels.push_back(j);
          r.text << "  dim " << n << " missing " << l << ": " << filled << "/"
                 << hs.size() << " filled, faces verified\n";
        }
      }
      r.json["levels"] = levels;
    }

    void cmd_homotopy(CrossedMonoid const& xm, CommandOptions const& o,
                      Report& r) {
      if (o.basepoint >= xm.num_objects()) {
        throw StructuralError("basepoint " + std::to_string(o.basepoint)
                              + " is not an object");
      }
      auto   cm = CrossedModule::from(xm);
      Object t(o.basepoint);
      r.json["basepoint"] = o.basepoint;
      ojson groups        = ojson::array();
      for (int n : o.pi) {
        ojson j{{"n", n}};
        if (n == 0) {
          auto comps = pi0(xm);
          j["label"] = "pi_0";
          j["order"] = comps.size();
          r.text << "  pi_0: " << comps.size() << " components\n";
        } else if (n <= 2) {
          auto c     = pi_compare(cm, n, t, o.max_cells);
          j["label"] = n == 1 ? "pi_1 = C(t,t)/Im(boundary_t)"
                              : "pi_2 = Ker(boundary_t)";
          j["algebraic"]  = group_json(c.algebraic);
          j["simplicial"] = group_json(c.simplicial);
          j["isomorphic"] = c.isomorphic();
          if (c.isomorphism) {
            j["isomorphism"] = *c.isomorphism;
          }
          j["problems"] = c.problems;
          r.text << "  pi_" << n << ": " << group_line(c.algebraic)
                 << "; brute force " << group_line(c.simplicial) << ", "
                 << (c.isomorphic() ? "isomorphic" : "NOT isomorphic") << "\n";
          for (auto const& p : c.problems) {
            r.text << "    " << p << "\n";
          }
          if (!c.isomorphic() || !c.problems.empty()) {
            r.fail(kProperty);
          }
        } else {
          auto v     = higher_vanishing(cm, t, n, o.max_cells);
          j["label"] = "pi_n, n >= 3";
          j["order"] = v.order;
          j["trivial"]  = v.trivial();
          j["problems"] = v.problems;
          r.text << "  pi_" << n << ": order " << v.order
                 << (v.trivial() ? ", trivial" : ", NOT trivial") << "\n";
          for (auto const& p : v.problems) {
            r.text << "    " << p << "\n";
          }
          if (!v.trivial()) {
            r.fail(kProperty);
          }
        }
        groups.push_back(j);
      }
      r.json["groups"] = groups;
    }

    CommandResult finish(Report& r) {
      r.json["status"] = r.status;
      return {r.status, r.text.str(), r.json.dump(2) + "\n"};
    }

    CommandResult error_result(std::string_view command, int status,
                               std::string const& kind,
                               std::string const& what) {
      Report r;
      r.status          = status;
      r.json["command"] = command;
      r.json["error"]   = {{"kind", kind}, {"message", what}};
      r.text << command << ": " << kind << " error: " << what << "\n";
      return finish(r);
    }

  }  // namespace

  std::vector<std::string> const& command_names() {
    static std::vector<std::string> const names = {
        "validate", "classify", "enumerate", "audit",
        "coskeletal", "kan", "fill", "homotopy"};
    return names;
  }

  std::pair<int, int> parse_dims(std::string_view s) {
    auto dots = s.find("..");
    if (dots == std::string_view::npos) {
      int v = parse_int(s);
      return {v, v};
    }
    int lo = parse_int(s.substr(0, dots));
    int hi = parse_int(s.substr(dots + 2));
    if (lo > hi) {
      throw std::invalid_argument("empty dimension range");
    }
    return {lo, hi};
  }

  std::vector<int> parse_pi(std::string_view s) {
    std::vector<int> out;
    while (true) {
      auto comma = s.find(',');
      out.push_back(parse_int(s.substr(0, comma)));
      if (comma == std::string_view::npos) {
        return out;
      }
      s.remove_prefix(comma + 1);
    }
  }

  CommandResult run_command(InputDocument const& doc, std::string_view command,
                            CommandOptions const& opts) {
    Report r;
    r.json["command"] = command;
    r.json["name"]    = doc.data.name;
    try {
      CrossedMonoid xm(doc.data);
      r.text << command << " " << (xm.name().empty() ? "<unnamed>" : xm.name())
             << "\n";
      if (command == "validate") {
        cmd_validate(xm, r);
      } else if (command == "classify") {
        cmd_classify(xm, r);
      } else if (command == "enumerate") {
        cmd_enumerate(xm, opts, r);
      } else if (command == "audit") {
        cmd_audit(xm, opts, r);
      } else if (command == "coskeletal") {
        cmd_coskeletal(xm, opts, r);
      } else if (command == "kan") {
        cmd_kan(xm, opts, r);
      } else if (command == "fill") {
        cmd_fill(xm, opts, r);
      } else if (command == "homotopy") {
        cmd_homotopy(xm, opts, r);
      } else {
        return error_result(command, kStructural, "usage",
                            "unknown command '" + std::string(command) + "'");
      }
    } catch (StructuralError const& e) {
      return error_result(command, kStructural, "structural", e.what());
    } catch (CapacityError const& e) {
      return error_result(command, kCapacity, "capacity", e.what());
    } catch (RefusalError const& e) {
      auto res = error_result(command, kRefused, "refusal",
                              e.hypothesis() + ": " + e.what());
      return res;
    } catch (std::invalid_argument const& e) {
      return error_result(command, kStructural, "usage", e.what());
    }
    r.text << (r.status == kPass ? "PASS" : "FAIL") << "\n";
    return finish(r);
  }

  CommandResult run_file(std::string const& path, std::string_view command,
                         CommandOptions const& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return error_result(command, kStructural, "io",
                          "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return run_command(parse_input(buf.str()), command, opts);
    } catch (ParseError const& e) {
      return error_result(command, kStructural, to_string(e.kind()), e.what());
    }
  }

}  // namespace xnerve
