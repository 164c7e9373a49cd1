#include "swim/stream/action_io.hpp"

#include <charconv>

#include "json.hpp"

namespace swim {

using nlohmann::json;

StreamFormat format_for_path(std::string_view path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? StreamFormat::Csv
                                                                      : StreamFormat::Ndjson;
}

namespace {

Seq json_seq(const json& v, const char* field, std::size_t lineno) {
  if (!v.is_number_integer()) throw ParseError(lineno, std::string(field) + " must be an integer");
  return v.get<Seq>();
}

Seq parse_int(std::string_view s, const char* field, std::size_t lineno) {
  Seq out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError(lineno, std::string(field) + " must be an integer, got '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

Action parse_ndjson_action(std::string_view line, std::size_t lineno) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(lineno, "record must be a JSON object");

  Action a;
  auto seq = doc.find("seq");
  if (seq == doc.end()) throw ParseError(lineno, "missing seq");
  a.seq = json_seq(*seq, "seq", lineno);

  auto user = doc.find("user");
  if (user == doc.end() || !user->is_string()) throw ParseError(lineno, "user must be a string");
  a.user = user->get<std::string>();
  if (a.user.empty()) throw ParseError(lineno, "user must be non-empty");

  if (auto p = doc.find("parent"); p != doc.end() && !p->is_null()) {
    a.parent = json_seq(*p, "parent", lineno);
  }
  if (auto t = doc.find("tags"); t != doc.end() && !t->is_null()) {
    if (!t->is_array()) throw ParseError(lineno, "tags must be an array of strings");
    for (const auto& tag : *t) {
      if (!tag.is_string()) throw ParseError(lineno, "tags must be an array of strings");
      a.tags.push_back(tag.get<std::string>());
    }
  }
  if (auto p = doc.find("pos"); p != doc.end() && !p->is_null()) {
    if (!p->is_array() || p->size() != 2 || !(*p)[0].is_number() || !(*p)[1].is_number()) {
      throw ParseError(lineno, "pos must be [x, y]");
    }
    a.pos = std::array<double, 2>{(*p)[0].get<double>(), (*p)[1].get<double>()};
  }
  return a;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

Action parse_csv_action(std::string_view line, std::size_t lineno) {
  auto fields = split_csv_line(line);
  if (fields.size() != 3) throw ParseError(lineno, "expected 3 columns seq,user,parent");
  Action a;
  a.seq = parse_int(fields[0], "seq", lineno);
  a.user = fields[1];
  if (a.user.empty()) throw ParseError(lineno, "user must be non-empty");
  if (!fields[2].empty()) a.parent = parse_int(fields[2], "parent", lineno);
  return a;
}

std::string to_ndjson(const Action& a) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["seq"] = a.seq;
  doc["user"] = a.user;
  doc["parent"] = a.parent ? nlohmann::ordered_json(*a.parent) : nlohmann::ordered_json(nullptr);
  if (!a.tags.empty()) doc["tags"] = a.tags;
  if (a.pos) doc["pos"] = {(*a.pos)[0], (*a.pos)[1]};
  return doc.dump();
}

std::optional<Action> ActionReader::next() {
  while (std::getline(in_, buf_)) {
    ++lineno_;
    if (!buf_.empty() && buf_.back() == '\r') buf_.pop_back();
    if (buf_.find_first_not_of(" \t") == std::string::npos) continue;
    if (format_ == StreamFormat::Csv && lineno_ == 1 && buf_.rfind("seq,", 0) == 0) continue;
    try {
      return format_ == StreamFormat::Csv ? parse_csv_action(buf_, lineno_)
                                          : parse_ndjson_action(buf_, lineno_);
    } catch (const ParseError&) {
      if (strict_) throw;
      ++skipped_;
    }
  }
  return std::nullopt;
}

}  // namespace swim
