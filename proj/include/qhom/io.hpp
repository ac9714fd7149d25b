#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/mesh.hpp"
#include "qhom/quandle.hpp"

namespace qhom {

  // Syntax error in a .qnd or .mesh file; line numbers are 1-based.
  class file_error : public input_error {
   public:
    file_error(std::string const& what, std::size_t line);
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  std::string read_text_file(std::filesystem::path const& path);
  void        write_text_file(std::filesystem::path const& path, std::string const& text);

  // .qnd: `qnd 1`, the order, then one row per line; `#` starts a comment.
  // Returns the rows without checking the quandle axioms.
  std::vector<std::vector<long long>> parse_qnd_rows(std::string_view text);
  QuandleTable                        parse_qnd(std::string_view text);
  QuandleTable                        load_quandle(std::filesystem::path const& path);
  std::string format_qnd(QuandleTable const& q, std::vector<std::string> const& comments = {});

  // .mesh: `mesh 1`, `components r`, `group i LABEL` for each i, then
  // optional `const i j e` and `phi i j e_0 ... e_{|A_i|-1}` lines.
  AffineMesh  parse_mesh(std::string_view text);
  AffineMesh  load_mesh(std::filesystem::path const& path);
  // Every group must carry a label; constants and maps that are zero are
  // omitted.
  std::string format_mesh(AffineMesh const& m, std::vector<std::string> const& comments = {});

}  // namespace qhom
