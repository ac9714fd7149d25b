#include "qhom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "qhom/congruence.hpp"
#include "qhom/enumerate.hpp"
#include "qhom/hom.hpp"
#include "qhom/io.hpp"
#include "qhom/mesh.hpp"
#include "qhom/terms.hpp"

namespace qhom {

  namespace {

    namespace fs = std::filesystem;

    class usage_error : public input_error {
     public:
      using input_error::input_error;
    };

    struct Input {
      QuandleTable              table;
      std::optional<AffineMesh> mesh;
    };

    Input load_input(std::string const& path) {
      if (fs::path(path).extension() == ".mesh") {
        AffineMesh m = load_mesh(path);
        QuandleTable t = mesh_to_quandle(m).table;
        return {std::move(t), std::move(m)};
      }
      return {load_quandle(path), std::nullopt};
    }

    void emit(std::ostream& out, std::string const& text, std::string const& path) {
      if (path.empty()) {
        out << text;
      } else {
        write_text_file(path, text);
      }
    }

    char const* truth(bool b) {
      return b ? "true" : "false";
    }

    // A mesh whose composed quandle M admits a map p: S -> M with
    // Hom(S,T) = {h ∘ p : h in Hom(M,T)} for every medial T.
    struct SourceMesh {
      AffineMesh           mesh;
      std::vector<element> pullback;  // element of S -> element of M
    };

    std::optional<SourceMesh> source_mesh(Input const& s) {
      if (s.mesh) {
        std::vector<element> id(s.table.order());
        for (element x = 0; x < id.size(); ++x) {
          id[x] = x;
        }
        return SourceMesh{*s.mesh, std::move(id)};
      }
      Quotient med = quotient(s.table, standard_congruence(s.table, CongruenceKind::medial));
      if (!check_property(med.table, Property::two_reductive)) {
        return std::nullopt;
      }
      Decomposition        d = with_labelled_groups(decompose_two_reductive(med.table));
      std::vector<element> composed_of(d.to_input.size());
      for (element c = 0; c < d.to_input.size(); ++c) {
        composed_of[d.to_input[c]] = c;
      }
      std::vector<element> pullback(s.table.order());
      for (element x = 0; x < pullback.size(); ++x) {
        pullback[x] = composed_of[med.projection[x]];
      }
      return SourceMesh{std::move(d.mesh), std::move(pullback)};
    }

    HomSet pull_back(HomSet const& on_mesh, std::vector<element> const& pullback) {
      HomSet out;
      out.source_order = pullback.size();
      out.target_order = on_mesh.target_order;
      out.engine       = on_mesh.engine;
      for (auto const& r : on_mesh.records) {
        HomRecord h;
        for (element p : pullback) {
          h.image.push_back(r.image[p]);
        }
        out.records.push_back(std::move(h));
      }
      std::sort(out.records.begin(), out.records.end());
      return out;
    }

    enum class Method { brute, mesh, automatic };

    // Either an exact count from the 2-reductive formula or a materialized
    // set from one of the enumerators.
    struct HomAnswer {
      std::optional<HomSet> homs;
      std::uint64_t         count = 0;
      Engine                engine = Engine::brute;
    };

    HomAnswer solve_hom(Input const& s, Input const& t, Method method, bool need_records) {
      HomAnswer a;
      if (method == Method::brute) {
        a.homs   = enumerate_homs(s.table, t.table);
        a.count  = a.homs->size();
        a.engine = Engine::brute;
        return a;
      }
      if (check_property(t.table, Property::two_reductive)) {
        a.engine = Engine::two_reductive_mesh;
        if (need_records) {
          a.homs  = enumerate_homs_two_reductive(s.table, t.table);
          a.count = a.homs->size();
        } else {
          a.count = count_homs_two_reductive(s.table, t.table).count;
        }
        return a;
      }
      if (t.mesh) {
        if (auto sm = source_mesh(s)) {
          a.homs   = pull_back(enumerate_mesh_homs(sm->mesh, *t.mesh), sm->pullback);
          a.count  = a.homs->size();
          a.engine = Engine::general_mesh;
          return a;
        }
      }
      if (method == Method::mesh) {
        throw usage_error(
            "--method mesh needs a 2-reductive target, or a .mesh target with a source "
            "given as a .mesh or whose medial quotient is 2-reductive");
      }
      a.homs   = enumerate_homs(s.table, t.table);
      a.count  = a.homs->size();
      a.engine = Engine::brute;
      return a;
    }

    std::string describe_witness(std::vector<char> const& vars, std::vector<element> const& w) {
      std::ostringstream os;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        os << (i ? " " : "") << vars[i] << '=' << w[i];
      }
      return os.str();
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite quandles, their quotients, meshes and homomorphisms", "qhom"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string          file, file2, expr, out_path, method_name = "auto", out_dir;
    bool                 medial = false, two_reductive = false;
    bool                 want_count = false, want_list = false, want_table = false;
    std::size_t          order = 0;

    auto* check = app.add_subcommand("check", "Verify the quandle axioms");
    check->add_option("FILE", file)->required();
    check->callback([&] {
      action = [&] {
        auto report = verify_quandle(parse_qnd_rows(read_text_file(file)));
        if (report.ok()) {
          out << "ok\n";
          return 0;
        }
        out << "fail: " << report.describe() << '\n';
        return 1;
      };
    });

    auto* props = app.add_subcommand("props", "List structural properties");
    props->add_option("FILE", file)->required();
    props->callback([&] {
      action = [&] {
        Input in = load_input(file);
        for (Property p : all_properties()) {
          out << to_string(p) << ": " << truth(check_property(in.table, p).holds) << '\n';
        }
        out << "components: " << components(in.table).count() << '\n';
        return 0;
      };
    });

    auto* comps = app.add_subcommand("components", "Print the orbit partition");
    comps->add_option("FILE", file)->required();
    comps->callback([&] {
      action = [&] {
        out << components(load_input(file).table).as_partition().to_string() << '\n';
        return 0;
      };
    });

    auto* ident = app.add_subcommand("identity", "Test an identity such as \"(x*y)*z = y*z\"");
    ident->add_option("FILE", file)->required();
    ident->add_option("IDENTITY", expr)->required();
    ident->callback([&] {
      action = [&] {
        Identity id  = parse_identity(expr);
        Input    in  = load_input(file);
        auto     chk = satisfies_identity(in.table, id);
        out << truth(chk.holds) << '\n';
        if (!chk.holds) {
          out << "witness: " << describe_witness(id.vars, chk.witness) << '\n';
        }
        return chk.holds ? 0 : 1;
      };
    });

    auto* quot = app.add_subcommand("quotient", "Quotient by a standard congruence");
    quot->add_option("FILE", file)->required();
    quot->add_flag("--medial", medial, "Quotient by the medial congruence");
    quot->add_flag("--two-reductive", two_reductive, "Quotient by the 2-reductive congruence");
    quot->add_option("--identity", expr, "Quotient by the congruence generated by an identity");
    quot->add_option("-o,--output", out_path);
    quot->callback([&] {
      action = [&] {
        int chosen = int(medial) + int(two_reductive) + int(!expr.empty());
        if (chosen != 1) {
          throw usage_error("quotient needs exactly one of --medial, --two-reductive, --identity");
        }
        Input     in = load_input(file);
        Partition alpha =
            medial          ? standard_congruence(in.table, CongruenceKind::medial)
            : two_reductive ? standard_congruence(in.table, CongruenceKind::two_reductive)
                            : standard_congruence(in.table, CongruenceKind::identities,
                                                  {parse_identity(expr)});
        Quotient q = quotient(in.table, alpha);
        emit(out, format_qnd(q.table, {"classes: " + alpha.to_string()}), out_path);
        return 0;
      };
    });

    auto* hom = app.add_subcommand("hom", "Homomorphisms from SRC to TGT");
    hom->add_option("SRC", file)->required();
    hom->add_option("TGT", file2)->required();
    hom->add_flag("--count", want_count, "Print |Hom(SRC,TGT)|");
    hom->add_flag("--list", want_list, "List every homomorphism");
    hom->add_flag("--table", want_table, "Print the Hom quandle (TGT must be medial)");
    hom->add_option("--method", method_name, "brute, mesh or auto")
        ->check(CLI::IsMember({"brute", "mesh", "auto"}));
    hom->callback([&] {
      action = [&] {
        if (int(want_count) + int(want_list) + int(want_table) != 1) {
          throw usage_error("hom needs exactly one of --count, --list, --table");
        }
        Method method = method_name == "brute" ? Method::brute
                        : method_name == "mesh" ? Method::mesh
                                                : Method::automatic;
        Input     s = load_input(file);
        Input     t = load_input(file2);
        HomAnswer a = solve_hom(s, t, method, !want_count);
        if (want_count) {
          out << a.count << '\n';
        } else if (want_list) {
          out << a.homs->serialize();
        } else {
          HomQuandle hq = hom_quandle(t.table, std::move(*a.homs));
          std::vector<std::string> notes;
          for (std::size_t i = 0; i < hq.homs.size(); ++i) {
            notes.push_back("h" + std::to_string(i) + " = " + join(hq.homs.records[i].image));
          }
          out << format_qnd(hq.table, notes);
        }
        return 0;
      };
    });

    auto* triv = app.add_subcommand("triv", "Homomorphisms with trivial image");
    triv->add_option("SRC", file)->required();
    triv->add_option("TGT", file2)->required();
    triv->callback([&] {
      action = [&] {
        TrivResult r = triv_homs(load_input(file).table, load_input(file2).table);
        out << "count: " << r.homs.size() << '\n';
        out << "predicted: " << r.predicted << '\n';
        return r.homs.size() == r.predicted ? 0 : 1;
      };
    });

    auto* mesh = app.add_subcommand("mesh", "Convert between quandles and meshes");
    mesh->require_subcommand(1);
    auto* decomp = mesh->add_subcommand("decompose", "Mesh of a 2-reductive quandle");
    decomp->add_option("FILE", file)->required();
    decomp->add_option("-o,--output", out_path);
    decomp->callback([&] {
      action = [&] {
        Decomposition            d = with_labelled_groups(decompose_two_reductive(load_quandle(file)));
        std::vector<std::string> notes{"composed element -> input element"};
        notes.push_back(join(d.to_input));
        emit(out, format_mesh(d.mesh, notes), out_path);
        return 0;
      };
    });
    auto* compose = mesh->add_subcommand("compose", "Quandle of a mesh");
    compose->add_option("FILE", file)->required();
    compose->add_option("-o,--output", out_path);
    compose->callback([&] {
      action = [&] {
        MeshQuandle mq = mesh_to_quandle(load_mesh(file));
        emit(out, format_qnd(mq.table), out_path);
        return 0;
      };
    });

    auto* en = app.add_subcommand("enumerate", "All quandles of order N up to isomorphism");
    en->add_option("N", order)->required()->check(CLI::Range(1, 6));
    en->add_option("--out-dir", out_dir);
    en->callback([&] {
      action = [&] {
        Catalog     cat = enumerate_quandles(order);
        std::string index;
        for (std::size_t r = 0; r < cat.size(); ++r) {
          index += index_line(r, cat.entries[r]) + '\n';
        }
        if (out_dir.empty()) {
          out << index;
          return 0;
        }
        fs::create_directories(out_dir);
        for (std::size_t r = 0; r < cat.size(); ++r) {
          auto name = "q" + std::to_string(order) + "_" + std::to_string(r) + ".qnd";
          write_text_file(fs::path(out_dir) / name, format_qnd(cat.entries[r].table));
        }
        write_text_file(fs::path(out_dir) / ("q" + std::to_string(order) + "_index.txt"), index);
        out << cat.size() << '\n';
        return 0;
      };
    });

    auto* iso = app.add_subcommand("iso", "Decide isomorphism");
    iso->add_option("A", file)->required();
    iso->add_option("B", file2)->required();
    iso->callback([&] {
      action = [&] {
        auto f = is_isomorphic(load_input(file).table, load_input(file2).table);
        out << truth(f.has_value()) << '\n';
        if (f) {
          out << "map: " << join(*f) << '\n';
        }
        return f ? 0 : 1;
      };
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
    try {
      return action();
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }

}  // namespace qhom
