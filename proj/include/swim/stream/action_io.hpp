#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swim/stream/action.hpp"

namespace swim {

enum class StreamFormat { Ndjson, Csv };

/// Picks the format from a file extension (`.csv` is CSV, anything else NDJSON).
StreamFormat format_for_path(std::string_view path);

/// `{"seq": int, "user": string, "parent": int|null, "tags": [string]?, "pos": [x,y]?}`.
/// Throws ParseError carrying `lineno`.
Action parse_ndjson_action(std::string_view line, std::size_t lineno);

/// `seq,user,parent` with an empty parent for root actions.
Action parse_csv_action(std::string_view line, std::size_t lineno);

/// One NDJSON line without the trailing newline. Optional fields are omitted
/// when empty; parent is always written (null for roots).
std::string to_ndjson(const Action& a);

/// Splits one CSV line; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

/// Pulls actions from a text stream. In lenient mode malformed records are
/// skipped and counted instead of throwing.
class ActionReader {
 public:
  ActionReader(std::istream& in, StreamFormat format, bool strict = true)
      : in_(in), format_(format), strict_(strict) {}

  std::optional<Action> next();

  std::size_t line() const { return lineno_; }
  std::size_t skipped() const { return skipped_; }

 private:
  std::istream& in_;
  StreamFormat format_;
  bool strict_;
  std::size_t lineno_ = 0;
  std::size_t skipped_ = 0;
  std::string buf_;
};

}  // namespace swim
