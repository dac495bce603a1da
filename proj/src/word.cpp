#include "igcert/word.hpp"

#include <algorithm>
#include <charconv>

#include "igcert/error.hpp"

namespace igcert {

  Word power(Word const& w, std::size_t n) {
    Word out;
    out.reserve(w.size() * n);
    for (std::size_t k = 0; k < n; ++k) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  Word subword(Word const& w, std::size_t first, std::size_t last) {
    return Word(w.begin() + first, w.begin() + last);
  }

  bool shortlex_less(Word const& a, Word const& b) noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(w[i]);
    }
    return out;
  }

  Word parse_word(std::string_view text) {
    Word        out;
    std::size_t pos = 0;
    if (text.empty()) {
      throw ParseError("empty word", 1, 1);
    }
    while (true) {
      auto const  comma = text.find(',', pos);
      auto const  end   = comma == std::string_view::npos ? text.size() : comma;
      letter_type value = 0;
      auto const* first = text.data() + pos;
      auto const* last  = text.data() + end;
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (first == last || ec != std::errc{} || ptr != last) {
        throw ParseError("expected a letter index", 1, pos + 1);
      }
      out.push_back(value);
      if (comma == std::string_view::npos) {
        return out;
      }
      pos = comma + 1;
    }
  }

}  // namespace igcert
