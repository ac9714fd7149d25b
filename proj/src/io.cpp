#include "qhom/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qhom {

  file_error::file_error(std::string const& what, std::size_t line)
      : input_error("line " + std::to_string(line) + ": " + what), _line(line) {}

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw input_error("cannot open '" + path.string() + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void write_text_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw input_error("cannot write '" + path.string() + "'");
    }
    out << text;
  }

  namespace {

    // Non-blank lines with comments removed, tokenized, with line numbers.
    struct line_tokens {
      std::size_t              line;
      std::vector<std::string> tokens;
    };

    std::vector<line_tokens> tokenize(std::string_view text) {
      std::vector<line_tokens> out;
      std::istringstream       in{std::string(text)};
      std::string              raw;
      std::size_t              number = 0;
      while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream       ls(raw);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) {
          tokens.push_back(tok);
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
      }
      return out;
    }

    long long to_integer(std::string const& tok, std::size_t line) {
      std::size_t used = 0;
      long long   v    = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty()) {
        throw file_error("expected an integer, found '" + tok + "'", line);
      }
      return v;
    }

    std::size_t to_index(std::string const& tok, std::size_t line, std::size_t bound,
                         char const* what) {
      long long v = to_integer(tok, line);
      if (v < 0 || static_cast<std::size_t>(v) >= bound) {
        throw file_error(std::string(what) + " " + tok + " is out of range", line);
      }
      return static_cast<std::size_t>(v);
    }

    void expect_header(std::vector<line_tokens> const& lines, char const* magic) {
      if (lines.empty()) {
        throw file_error(std::string("missing '") + magic + " 1' header", 1);
      }
      auto const& h = lines.front();
      if (h.tokens.size() != 2 || h.tokens[0] != magic) {
        throw file_error(std::string("expected header '") + magic + " 1'", h.line);
      }
      if (h.tokens[1] != "1") {
        throw file_error("unsupported " + std::string(magic) + " version " + h.tokens[1], h.line);
      }
    }

  }  // namespace

  std::vector<std::vector<long long>> parse_qnd_rows(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "qnd");
    if (lines.size() < 2 || lines[1].tokens.size() != 1) {
      throw file_error("expected the order on its own line",
                       lines.size() < 2 ? lines[0].line + 1 : lines[1].line);
    }
    long long n = to_integer(lines[1].tokens[0], lines[1].line);
    if (n <= 0) {
      throw file_error("order must be positive", lines[1].line);
    }
    std::size_t const order = static_cast<std::size_t>(n);
    if (lines.size() - 2 < order) {
      throw file_error("expected " + std::to_string(order) + " rows, found "
                           + std::to_string(lines.size() - 2),
                       lines.back().line);
    }
    if (lines.size() - 2 > order) {
      throw file_error("unexpected extra row", lines[2 + order].line);
    }
    std::vector<std::vector<long long>> rows;
    for (std::size_t r = 0; r < order; ++r) {
      auto const& lt = lines[2 + r];
      if (lt.tokens.size() != order) {
        throw file_error("row " + std::to_string(r) + " has " + std::to_string(lt.tokens.size())
                             + " entries, expected " + std::to_string(order),
                         lt.line);
      }
      std::vector<long long> row;
      for (auto const& tok : lt.tokens) {
        long long v = to_integer(tok, lt.line);
        if (v < 0 || v >= n) {
          throw file_error("entry " + tok + " is out of range 0.." + std::to_string(n - 1),
                           lt.line);
        }
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  QuandleTable parse_qnd(std::string_view text) {
    return QuandleTable(parse_qnd_rows(text));
  }

  QuandleTable load_quandle(std::filesystem::path const& path) {
    return parse_qnd(read_text_file(path));
  }

  std::string format_qnd(QuandleTable const& q, std::vector<std::string> const& comments) {
    std::ostringstream os;
    os << "qnd 1\n";
    for (auto const& c : comments) {
      os << "# " << c << '\n';
    }
    os << q.order() << '\n';
    for (element x = 0; x < q.order(); ++x) {
      auto row = q.row(x);
      os << join(std::vector<element>(row.begin(), row.end())) << '\n';
    }
    return os.str();
  }

  AffineMesh parse_mesh(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "mesh");
    if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "components") {
      throw file_error("expected 'components r'",
                       lines.size() < 2 ? lines[0].line + 1 : lines[1].line);
    }
    long long r = to_integer(lines[1].tokens[1], lines[1].line);
    if (r <= 0) {
      throw file_error("component count must be positive", lines[1].line);
    }
    std::size_t const              count = static_cast<std::size_t>(r);
    std::vector<AbelianGroupTable> groups(count);
    std::vector<bool>              have_group(count, false);
    std::size_t                    pos = 2;
    for (; pos < lines.size() && lines[pos].tokens[0] == "group"; ++pos) {
      auto const& lt = lines[pos];
      if (lt.tokens.size() != 3) {
        throw file_error("expected 'group i LABEL'", lt.line);
      }
      std::size_t i = to_index(lt.tokens[1], lt.line, count, "group index");
      if (have_group[i]) {
        throw file_error("group " + std::to_string(i) + " declared twice", lt.line);
      }
      try {
        groups[i] = AbelianGroupTable::from_label(lt.tokens[2]);
      } catch (input_error const& e) {
        throw file_error(e.what(), lt.line);
      }
      have_group[i] = true;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (!have_group[i]) {
        throw file_error("group " + std::to_string(i) + " is not declared",
                         pos < lines.size() ? lines[pos].line : lines.back().line);
      }
    }
    AffineMesh                                  m = AffineMesh::zero(std::move(groups));
    std::set<std::pair<std::size_t, std::size_t>> seen_const, seen_phi;
    for (; pos < lines.size(); ++pos) {
      auto const& lt  = lines[pos];
      auto const& tok = lt.tokens;
      if (tok[0] == "const") {
        if (tok.size() != 4) {
          throw file_error("expected 'const i j e'", lt.line);
        }
        std::size_t i = to_index(tok[1], lt.line, count, "component index");
        std::size_t j = to_index(tok[2], lt.line, count, "component index");
        if (!seen_const.emplace(i, j).second) {
          throw file_error("constant " + tok[1] + " " + tok[2] + " given twice", lt.line);
        }
        m.consts[i][j] = static_cast<element>(to_index(tok[3], lt.line, m.groups[j].order(), "element"));
      } else if (tok[0] == "phi") {
        if (tok.size() < 3) {
          throw file_error("expected 'phi i j e_0 ...'", lt.line);
        }
        std::size_t i = to_index(tok[1], lt.line, count, "component index");
        std::size_t j = to_index(tok[2], lt.line, count, "component index");
        if (!seen_phi.emplace(i, j).second) {
          throw file_error("map " + tok[1] + " " + tok[2] + " given twice", lt.line);
        }
        if (tok.size() != 3 + m.groups[i].order()) {
          throw file_error("phi " + tok[1] + " " + tok[2] + " needs "
                               + std::to_string(m.groups[i].order()) + " images",
                           lt.line);
        }
        for (std::size_t a = 0; a < m.groups[i].order(); ++a) {
          m.phi[i][j][a] = static_cast<element>(to_index(tok[3 + a], lt.line, m.groups[j].order(), "element"));
        }
      } else if (tok[0] == "group") {
        throw file_error("group declarations must come before constants and maps", lt.line);
      } else {
        throw file_error("unknown directive '" + tok[0] + "'", lt.line);
      }
    }
    return m;
  }

  AffineMesh load_mesh(std::filesystem::path const& path) {
    return parse_mesh(read_text_file(path));
  }

  std::string format_mesh(AffineMesh const& m, std::vector<std::string> const& comments) {
    m.check_structure();
    std::ostringstream os;
    os << "mesh 1\n";
    for (auto const& c : comments) {
      os << "# " << c << '\n';
    }
    std::size_t const r = m.index_count();
    os << "components " << r << '\n';
    for (std::size_t i = 0; i < r; ++i) {
      if (!m.groups[i].label()) {
        throw input_error("group " + std::to_string(i) + " has no label; identify it first");
      }
      os << "group " << i << ' ' << *m.groups[i].label() << '\n';
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (m.consts[i][j] != 0) {
          os << "const " << i << ' ' << j << ' ' << m.consts[i][j] << '\n';
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        auto const& map = m.phi[i][j];
        if (std::any_of(map.begin(), map.end(), [](element v) { return v != 0; })) {
          os << "phi " << i << ' ' << j << ' ' << join(map) << '\n';
        }
      }
    }
    return os.str();
  }

}  // namespace qhom
