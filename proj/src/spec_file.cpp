#include "igcert/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    struct Line {
      std::vector<Token> tokens;
      std::size_t        number;  // 1-based
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        auto const       eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{}
                                             : text.substr(eol + 1);
        if (!raw.empty() && raw.back() == '\r') {
          raw.remove_suffix(1);
        }
        Line line{{}, number};
        std::size_t i = 0;
        while (i < raw.size()) {
          while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
            ++i;
          }
          if (i == raw.size()) {
            break;
          }
          if (line.tokens.empty() && raw[i] == '#') {
            break;
          }
          std::size_t const start = i;
          while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') {
            ++i;
          }
          line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
      }
      return lines;
    }

    [[noreturn]] void fail(std::string const& what, Line const& line, Token const& at) {
      throw ParseError(what, line.number, at.column);
    }

    [[noreturn]] void fail_end(std::string const& what, Line const& line) {
      auto const& last = line.tokens.back();
      throw ParseError(what, line.number, last.column + last.text.size());
    }

    std::size_t parse_number(Line const& line, Token const& tok) {
      std::size_t value = 0;
      auto const* first = tok.text.data();
      auto const* last  = first + tok.text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        fail("expected a non-negative integer, found '" + std::string(tok.text)
                 + "'",
             line,
             tok);
      }
      return value;
    }

    std::size_t expect_keyword_value(Line const&      line,
                                     std::string_view keyword) {
      if (line.tokens.size() < 2) {
        fail_end("'" + std::string(keyword) + "' needs a value", line);
      }
      if (line.tokens.size() > 2) {
        fail("unexpected trailing input", line, line.tokens[2]);
      }
      return parse_number(line, line.tokens[1]);
    }

    std::vector<std::uint32_t> number_list(Line const& line, std::size_t from) {
      std::vector<std::uint32_t> out;
      for (std::size_t t = from; t < line.tokens.size(); ++t) {
        out.push_back(static_cast<std::uint32_t>(parse_number(line, line.tokens[t])));
      }
      return out;
    }

    CayleySpec parse_cayley(std::vector<Line> const& lines) {
      std::optional<std::size_t> order;
      CayleySpec                 spec;
      std::vector<bool>          have;
      for (std::size_t k = 1; k < lines.size(); ++k) {
        Line const& line = lines[k];
        auto const  key  = line.tokens[0].text;
        if (key == "order") {
          if (order) {
            fail("duplicate 'order'", line, line.tokens[0]);
          }
          order = expect_keyword_value(line, key);
          if (*order == 0) {
            fail("order must be positive", line, line.tokens[1]);
          }
          spec.rows.assign(*order, {});
          have.assign(*order, false);
        } else if (key == "row") {
          if (!order) {
            fail("'row' before 'order'", line, line.tokens[0]);
          }
          if (line.tokens.size() < 2 || line.tokens[1].text.back() != ':') {
            fail_end("expected 'row i:'", line);
          }
          Token idx = line.tokens[1];
          idx.text.remove_suffix(1);
          std::size_t const i = parse_number(line, idx);
          if (i >= *order) {
            fail("row index out of range", line, line.tokens[1]);
          }
          if (have[i]) {
            fail("duplicate row " + std::to_string(i), line, line.tokens[1]);
          }
          auto values = number_list(line, 2);
          if (values.size() != *order) {
            fail_end("row " + std::to_string(i) + " has "
                         + std::to_string(values.size()) + " entries, expected "
                         + std::to_string(*order),
                     line);
          }
          for (std::size_t t = 0; t < values.size(); ++t) {
            if (values[t] >= *order) {
              fail("entry out of range", line, line.tokens[t + 2]);
            }
          }
          spec.rows[i] = std::move(values);
          have[i]      = true;
        } else {
          fail("unknown key '" + std::string(key) + "' for kind cayley",
               line,
               line.tokens[0]);
        }
      }
      if (!order) {
        throw ParseError("missing 'order'", lines.back().number + 1, 1);
      }
      for (std::size_t i = 0; i < *order; ++i) {
        if (!have[i]) {
          throw ParseError("missing row " + std::to_string(i),
                           lines.back().number + 1,
                           1);
        }
      }
      return spec;
    }

    TransformationSpec parse_transformations(std::vector<Line> const& lines) {
      TransformationSpec spec;
      bool               have_points = false;
      for (std::size_t k = 1; k < lines.size(); ++k) {
        Line const& line = lines[k];
        auto const  key  = line.tokens[0].text;
        if (key == "points") {
          spec.points = expect_keyword_value(line, key);
          if (spec.points == 0) {
            fail("points must be positive", line, line.tokens[1]);
          }
          have_points = true;
        } else if (key == "gen:") {
          if (!have_points) {
            fail("'gen:' before 'points'", line, line.tokens[0]);
          }
          auto images = number_list(line, 1);
          if (images.size() != spec.points) {
            fail_end("generator has " + std::to_string(images.size())
                         + " images, expected " + std::to_string(spec.points),
                     line);
          }
          for (std::size_t t = 0; t < images.size(); ++t) {
            if (images[t] >= spec.points) {
              fail("image out of range", line, line.tokens[t + 1]);
            }
          }
          spec.generators.push_back(std::move(images));
        } else if (key == "adjoin-identity") {
          if (line.tokens.size() != 2
              || (line.tokens[1].text != "true" && line.tokens[1].text != "false")) {
            fail_end("expected 'adjoin-identity true|false'", line);
          }
          spec.adjoin_identity = line.tokens[1].text == "true";
        } else {
          fail("unknown key '" + std::string(key) + "' for kind transformations",
               line,
               line.tokens[0]);
        }
      }
      if (!have_points) {
        throw ParseError("missing 'points'", lines.back().number + 1, 1);
      }
      return spec;
    }

    MatrixSpec parse_matrix(std::vector<Line> const& lines) {
      MatrixSpec spec;
      for (std::size_t k = 1; k < lines.size(); ++k) {
        Line const& line = lines[k];
        auto const  key  = line.tokens[0].text;
        if (key == "dim") {
          spec.dim = expect_keyword_value(line, key);
        } else if (key == "field") {
          spec.field = expect_keyword_value(line, key);
        } else {
          fail("unknown key '" + std::string(key) + "' for kind matrix",
               line,
               line.tokens[0]);
        }
      }
      if (spec.dim == 0 || spec.field == 0) {
        throw ParseError("matrix spec needs 'dim' and 'field'",
                         lines.back().number + 1,
                         1);
      }
      return spec;
    }
  }  // namespace

  SemigroupSpec parse_semigroup_spec(std::string_view text) {
    auto const lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError("empty specification", 1, 1);
    }
    Line const& head = lines.front();
    if (head.tokens[0].text != "kind") {
      fail("expected 'kind' on the first line", head, head.tokens[0]);
    }
    if (head.tokens.size() != 2) {
      fail_end("expected 'kind cayley|transformations|matrix'", head);
    }
    auto const kind = head.tokens[1].text;
    if (kind == "cayley") {
      return parse_cayley(lines);
    } else if (kind == "transformations") {
      return parse_transformations(lines);
    } else if (kind == "matrix") {
      return parse_matrix(lines);
    }
    fail("unknown kind '" + std::string(kind) + "'", head, head.tokens[1]);
  }

  SemigroupSpec load_semigroup_spec(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw SpecError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_semigroup_spec(buffer.str());
  }

}  // namespace igcert
