#include "thoth/pdf_text.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "thoth/utf8.hpp"

namespace thoth {

namespace {

// ---------------------------------------------------------------- objects

struct Object;
using Array = std::vector<Object>;
using Dict = std::map<std::string, Object, std::less<>>;

struct Ref {
  int num = 0;
  int gen = 0;
};

struct Object {
  enum class Type { Null, Bool, Number, String, Name, Array, Dict, Ref, Keyword };

  Type type = Type::Null;
  bool boolean = false;
  double number = 0.0;
  std::string text;  // String bytes, Name (without '/'), or Keyword
  std::shared_ptr<Array> array;
  std::shared_ptr<Dict> dict;
  Ref ref;

  bool is(Type t) const { return type == t; }
  bool is_keyword(std::string_view k) const { return type == Type::Keyword && text == k; }
  bool is_name(std::string_view n) const { return type == Type::Name && text == n; }

  const Object* get(std::string_view key) const {
    if (type != Type::Dict) return nullptr;
    auto it = dict->find(key);
    return it == dict->end() ? nullptr : &it->second;
  }
};

Object make_keyword(std::string k) {
  Object o;
  o.type = Object::Type::Keyword;
  o.text = std::move(k);
  return o;
}

// ------------------------------------------------------------------ lexer

bool is_pdf_space(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0';
}

bool is_delimiter(char c) {
  return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '{' ||
         c == '}' || c == '/' || c == '%';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

class Parser {
 public:
  explicit Parser(std::string_view data, std::size_t pos = 0) : data_(data), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  bool at_end() {
    skip_space();
    return pos_ >= data_.size();
  }

  void skip_space() {
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (is_pdf_space(c)) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  // Parses one object. Integers followed by "gen R" become references.
  // Returns nullopt at end of input or on a stray closing delimiter.
  std::optional<Object> parse(int depth = 0) {
    if (depth > 64) return std::nullopt;
    skip_space();
    if (pos_ >= data_.size()) return std::nullopt;
    const char c = data_[pos_];
    if (c == '/') return parse_name();
    if (c == '(') return parse_literal();
    if (c == '<') {
      if (peek(1) == '<') return parse_dict(depth);
      return parse_hex();
    }
    if (c == '[') return parse_array(depth);
    if (c == ']' || c == '>' || c == ')' || c == '}') {
      ++pos_;
      return make_keyword(std::string(1, c));
    }
    if (c == '{') {
      ++pos_;
      return make_keyword("{");
    }
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return parse_number();
    return parse_keyword();
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < data_.size() ? data_[pos_ + ahead] : '\0';
  }

  Object parse_name() {
    ++pos_;
    Object o;
    o.type = Object::Type::Name;
    while (pos_ < data_.size() && !is_pdf_space(data_[pos_]) && !is_delimiter(data_[pos_])) {
      if (data_[pos_] == '#' && pos_ + 2 < data_.size() && hex_value(data_[pos_ + 1]) >= 0 &&
          hex_value(data_[pos_ + 2]) >= 0) {
        o.text.push_back(static_cast<char>(hex_value(data_[pos_ + 1]) * 16 +
                                           hex_value(data_[pos_ + 2])));
        pos_ += 3;
      } else {
        o.text.push_back(data_[pos_++]);
      }
    }
    return o;
  }

  Object parse_literal() {
    ++pos_;
    Object o;
    o.type = Object::Type::String;
    int nesting = 1;
    while (pos_ < data_.size()) {
      char c = data_[pos_++];
      if (c == '\\') {
        if (pos_ >= data_.size()) break;
        c = data_[pos_++];
        switch (c) {
          case 'n': o.text.push_back('\n'); break;
          case 'r': o.text.push_back('\r'); break;
          case 't': o.text.push_back('\t'); break;
          case 'b': o.text.push_back('\b'); break;
          case 'f': o.text.push_back('\f'); break;
          case '\r':
            if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
            break;
          case '\n': break;
          default:
            if (c >= '0' && c <= '7') {
              int v = c - '0';
              for (int k = 0; k < 2 && pos_ < data_.size() && data_[pos_] >= '0' &&
                              data_[pos_] <= '7';
                   ++k) {
                v = v * 8 + (data_[pos_++] - '0');
              }
              o.text.push_back(static_cast<char>(v & 0xFF));
            } else {
              o.text.push_back(c);
            }
        }
      } else if (c == '(') {
        ++nesting;
        o.text.push_back(c);
      } else if (c == ')') {
        if (--nesting == 0) break;
        o.text.push_back(c);
      } else {
        o.text.push_back(c);
      }
    }
    return o;
  }

  Object parse_hex() {
    ++pos_;
    Object o;
    o.type = Object::Type::String;
    int hi = -1;
    while (pos_ < data_.size() && data_[pos_] != '>') {
      const int v = hex_value(data_[pos_++]);
      if (v < 0) continue;
      if (hi < 0) {
        hi = v;
      } else {
        o.text.push_back(static_cast<char>(hi * 16 + v));
        hi = -1;
      }
    }
    if (hi >= 0) o.text.push_back(static_cast<char>(hi * 16));
    if (pos_ < data_.size()) ++pos_;
    return o;
  }

  Object parse_array(int depth) {
    ++pos_;
    Object o;
    o.type = Object::Type::Array;
    o.array = std::make_shared<Array>();
    for (;;) {
      auto item = parse(depth + 1);
      if (!item || item->is_keyword("]")) break;
      o.array->push_back(std::move(*item));
    }
    return o;
  }

  Object parse_dict(int depth) {
    pos_ += 2;
    Object o;
    o.type = Object::Type::Dict;
    o.dict = std::make_shared<Dict>();
    for (;;) {
      skip_space();
      if (pos_ + 1 < data_.size() && data_[pos_] == '>' && data_[pos_ + 1] == '>') {
        pos_ += 2;
        break;
      }
      auto key = parse(depth + 1);
      if (!key) break;
      if (!key->is(Object::Type::Name)) {
        if (key->is_keyword(">")) break;
        continue;
      }
      auto value = parse(depth + 1);
      if (!value) break;
      (*o.dict)[key->text] = std::move(*value);
    }
    return o;
  }

  Object parse_number() {
    const std::size_t start = pos_;
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if ((c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+') {
        ++pos_;
      } else {
        break;
      }
    }
    Object o;
    o.type = Object::Type::Number;
    const std::string lexeme(data_.substr(start, pos_ - start));
    o.number = std::strtod(lexeme.c_str(), nullptr);
    const bool integral = lexeme.find('.') == std::string::npos;
    if (integral && o.number >= 0) {
      // Look ahead for "gen R".
      const std::size_t save = pos_;
      skip_space();
      const std::size_t gen_start = pos_;
      while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') ++pos_;
      if (pos_ > gen_start) {
        const int gen = std::atoi(std::string(data_.substr(gen_start, pos_ - gen_start)).c_str());
        skip_space();
        if (pos_ < data_.size() && data_[pos_] == 'R' &&
            (pos_ + 1 >= data_.size() || is_pdf_space(data_[pos_ + 1]) ||
             is_delimiter(data_[pos_ + 1]))) {
          ++pos_;
          o.type = Object::Type::Ref;
          o.ref = Ref{static_cast<int>(o.number), gen};
          return o;
        }
      }
      pos_ = save;
    }
    return o;
  }

  Object parse_keyword() {
    const std::size_t start = pos_;
    while (pos_ < data_.size() && !is_pdf_space(data_[pos_]) && !is_delimiter(data_[pos_])) {
      ++pos_;
    }
    if (pos_ == start) ++pos_;  // lone unexpected byte
    std::string word(data_.substr(start, pos_ - start));
    if (word == "true" || word == "false") {
      Object o;
      o.type = Object::Type::Bool;
      o.boolean = word == "true";
      return o;
    }
    if (word == "null") return Object{};
    return make_keyword(std::move(word));
  }

  std::string_view data_;
  std::size_t pos_;
};

// ---------------------------------------------------------------- filters

std::optional<std::string> inflate(std::string_view in) {
  for (int window_bits : {15, -15}) {
    z_stream zs{};
    if (inflateInit2(&zs, window_bits) != Z_OK) return std::nullopt;
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    std::string out;
    std::array<char, 16384> buf;
    int rc = Z_OK;
    while (rc == Z_OK) {
      zs.next_out = reinterpret_cast<Bytef*>(buf.data());
      zs.avail_out = static_cast<uInt>(buf.size());
      rc = ::inflate(&zs, Z_NO_FLUSH);
      out.append(buf.data(), buf.size() - zs.avail_out);
      if (rc == Z_BUF_ERROR && zs.avail_in == 0) break;  // truncated stream
    }
    inflateEnd(&zs);
    if (rc == Z_STREAM_END || (!out.empty() && rc != Z_DATA_ERROR)) return out;
    if (!out.empty()) return out;  // keep whatever decoded before the damage
  }
  return std::nullopt;
}

std::string ascii_hex_decode(std::string_view in) {
  std::string out;
  int hi = -1;
  for (char c : in) {
    if (c == '>') break;
    const int v = hex_value(c);
    if (v < 0) continue;
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<char>(hi * 16 + v));
      hi = -1;
    }
  }
  if (hi >= 0) out.push_back(static_cast<char>(hi * 16));
  return out;
}

std::string ascii85_decode(std::string_view in) {
  std::string out;
  std::uint32_t tuple = 0;
  int count = 0;
  std::size_t i = 0;
  if (in.substr(0, 2) == "<~") i = 2;
  for (; i < in.size(); ++i) {
    const char c = in[i];
    if (c == '~') break;
    if (is_pdf_space(c)) continue;
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') continue;
    tuple = tuple * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      for (int k = 3; k >= 0; --k) out.push_back(static_cast<char>((tuple >> (8 * k)) & 0xFF));
      tuple = 0;
      count = 0;
    }
  }
  if (count > 1) {
    for (int k = count; k < 5; ++k) tuple = tuple * 85 + 84;
    for (int k = 0; k < count - 1; ++k) {
      out.push_back(static_cast<char>((tuple >> (8 * (3 - k))) & 0xFF));
    }
  }
  return out;
}

// ---------------------------------------------------------------- document

struct Entry {
  Object object;
  std::optional<std::size_t> stream_begin;  // offset of stream data in file
  std::string decoded_stream;               // for objects from object streams
};

class Document {
 public:
  explicit Document(std::string_view data) : data_(data) { scan(); }

  const Object& resolve(const Object& o, int depth = 0) const {
    if (!o.is(Object::Type::Ref) || depth > 32) return o;
    auto it = objects_.find(o.ref.num);
    if (it == objects_.end()) return null_;
    return resolve(it->second.object, depth + 1);
  }

  const Object* lookup(const Object& dict, std::string_view key) const {
    const Object& d = resolve(dict);
    const Object* v = d.get(key);
    return v ? &resolve(*v) : nullptr;
  }

  // Decoded stream data for an indirect stream object; nullopt when the
  // object is not a stream or uses a filter we cannot decode.
  std::optional<std::string> stream(const Object& ref_or_obj) const {
    const Entry* e = entry_for(ref_or_obj);
    if (!e || !e->stream_begin) return std::nullopt;
    return decode(e->object, raw_stream(*e));
  }

  const Object* stream_dict(const Object& ref_or_obj) const {
    const Entry* e = entry_for(ref_or_obj);
    return e && e->stream_begin ? &e->object : nullptr;
  }

  bool encrypted() const { return encrypted_; }
  std::size_t object_count() const { return objects_.size(); }

  std::vector<const Object*> pages() const;

 private:
  const Entry* entry_for(const Object& o) const {
    if (!o.is(Object::Type::Ref)) return nullptr;
    auto it = objects_.find(o.ref.num);
    return it == objects_.end() ? nullptr : &it->second;
  }

  std::string_view raw_stream(const Entry& e) const {
    const std::size_t begin = *e.stream_begin;
    const Object* len = e.object.get("Length");
    if (len) {
      const Object& l = resolve(*len);
      if (l.is(Object::Type::Number) && l.number >= 0) {
        const auto n = static_cast<std::size_t>(l.number);
        if (begin + n <= data_.size()) {
          std::size_t after = begin + n;
          while (after < data_.size() && is_pdf_space(data_[after])) ++after;
          if (data_.substr(after, 9) == "endstream") return data_.substr(begin, n);
        }
      }
    }
    std::size_t end = data_.find("endstream", begin);
    if (end == std::string_view::npos) end = data_.size();
    std::size_t stop = end;
    if (stop > begin && data_[stop - 1] == '\n') --stop;
    if (stop > begin && data_[stop - 1] == '\r') --stop;
    return data_.substr(begin, stop - begin);
  }

  std::optional<std::string> decode(const Object& dict, std::string_view raw) const {
    std::vector<std::string> filters;
    if (const Object* f = dict.get("Filter")) {
      const Object& fr = resolve(*f);
      if (fr.is(Object::Type::Name)) filters.push_back(fr.text);
      if (fr.is(Object::Type::Array)) {
        for (const auto& x : *fr.array) {
          const Object& xr = resolve(x);
          if (xr.is(Object::Type::Name)) filters.push_back(xr.text);
        }
      }
    }
    std::string data(raw);
    for (const auto& f : filters) {
      if (f == "FlateDecode" || f == "Fl") {
        auto out = inflate(data);
        if (!out) return std::nullopt;
        data = std::move(*out);
      } else if (f == "ASCIIHexDecode" || f == "AHx") {
        data = ascii_hex_decode(data);
      } else if (f == "ASCII85Decode" || f == "A85") {
        data = ascii85_decode(data);
      } else {
        return std::nullopt;
      }
    }
    return data;
  }

  void scan();
  void scan_object_streams();
  void read_trailers();

  std::string_view data_;
  std::map<int, Entry> objects_;
  Object root_;
  bool encrypted_ = false;
  Object null_;
};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Finds "<num> <gen> obj" headers in file order and parses the object
// after each. Stream bodies are skipped so their bytes are not rescanned.
void Document::scan() {
  std::size_t pos = 0;
  while (pos < data_.size()) {
    const std::size_t hit = data_.find("obj", pos);
    if (hit == std::string_view::npos) break;
    pos = hit + 3;
    if (hit + 3 < data_.size() && !is_pdf_space(data_[hit + 3]) && !is_delimiter(data_[hit + 3])) {
      continue;
    }
    // Walk back over "<num> <gen> ".
    std::size_t k = hit;
    if (k == 0 || !is_pdf_space(data_[k - 1])) continue;
    while (k > 0 && is_pdf_space(data_[k - 1])) --k;
    std::size_t gen_end = k;
    while (k > 0 && data_[k - 1] >= '0' && data_[k - 1] <= '9') --k;
    if (k == gen_end || k == 0 || !is_pdf_space(data_[k - 1])) continue;
    const std::string_view gen = data_.substr(k, gen_end - k);
    while (k > 0 && is_pdf_space(data_[k - 1])) --k;
    std::size_t num_end = k;
    while (k > 0 && data_[k - 1] >= '0' && data_[k - 1] <= '9') --k;
    if (k == num_end || (k > 0 && !is_pdf_space(data_[k - 1]) && !is_delimiter(data_[k - 1]))) {
      continue;
    }
    const std::string_view num = data_.substr(k, num_end - k);
    if (!all_digits(num) || !all_digits(gen) || num.size() > 9) continue;

    Parser p(data_, hit + 3);
    auto obj = p.parse();
    if (!obj) break;
    Entry e;
    e.object = std::move(*obj);
    p.skip_space();
    if (e.object.is(Object::Type::Dict) && data_.substr(p.pos(), 6) == "stream") {
      std::size_t s = p.pos() + 6;
      if (s < data_.size() && data_[s] == '\r') ++s;
      if (s < data_.size() && data_[s] == '\n') ++s;
      e.stream_begin = s;
      const std::size_t end = data_.find("endstream", s);
      pos = end == std::string_view::npos ? data_.size() : end + 9;
    } else {
      pos = p.pos();
    }
    objects_[std::atoi(std::string(num).c_str())] = std::move(e);
  }
  scan_object_streams();
  read_trailers();
}

void Document::scan_object_streams() {
  std::vector<int> containers;
  for (const auto& [num, e] : objects_) {
    if (e.stream_begin) {
      const Object* type = e.object.get("Type");
      if (type && type->is_name("ObjStm")) containers.push_back(num);
    }
  }
  for (int num : containers) {
    const Entry& container = objects_.at(num);
    auto body = decode(container.object, raw_stream(container));
    if (!body) continue;
    const Object* n_obj = container.object.get("N");
    const Object* first_obj = container.object.get("First");
    if (!n_obj || !first_obj) continue;
    const int n = static_cast<int>(resolve(*n_obj).number);
    const auto first = static_cast<std::size_t>(resolve(*first_obj).number);
    Parser header(*body);
    std::vector<std::pair<int, std::size_t>> index;
    for (int i = 0; i < n; ++i) {
      auto a = header.parse();
      auto b = header.parse();
      if (!a || !b || !a->is(Object::Type::Number) || !b->is(Object::Type::Number)) break;
      index.emplace_back(static_cast<int>(a->number), static_cast<std::size_t>(b->number));
    }
    auto shared_body = std::make_shared<std::string>(std::move(*body));
    for (auto [obj_num, offset] : index) {
      if (objects_.contains(obj_num) || first + offset >= shared_body->size()) continue;
      Parser p(*shared_body, first + offset);
      auto obj = p.parse();
      if (!obj) continue;
      Entry e;
      e.object = std::move(*obj);
      objects_[obj_num] = std::move(e);
    }
  }
}

void Document::read_trailers() {
  auto consider = [&](const Object& dict) {
    if (!dict.is(Object::Type::Dict)) return;
    if (dict.get("Encrypt")) encrypted_ = true;
    if (const Object* root = dict.get("Root")) root_ = *root;
  };
  std::size_t pos = 0;
  while ((pos = data_.find("trailer", pos)) != std::string_view::npos) {
    Parser p(data_, pos + 7);
    if (auto t = p.parse()) consider(*t);
    pos += 7;
  }
  for (const auto& [num, e] : objects_) {
    const Object* type = e.object.get("Type");
    if (type && type->is_name("XRef")) consider(e.object);
  }
  if (root_.is(Object::Type::Null)) {
    for (const auto& [num, e] : objects_) {
      const Object* type = e.object.get("Type");
      if (type && type->is_name("Catalog")) {
        root_.type = Object::Type::Ref;
        root_.ref = Ref{num, 0};
        break;
      }
    }
  }
}

std::vector<const Object*> Document::pages() const {
  std::vector<const Object*> out;
  std::set<int> seen;
  // Recursive walk; each page node is returned as a resolved dict.
  auto walk = [&](auto&& self, const Object& node, int depth) -> void {
    if (depth > 64) return;
    if (node.is(Object::Type::Ref)) {
      if (!seen.insert(node.ref.num).second) return;
    }
    const Object& n = resolve(node);
    if (!n.is(Object::Type::Dict)) return;
    const Object* type = n.get("Type");
    const Object* kids = lookup(n, "Kids");
    if (kids && kids->is(Object::Type::Array)) {
      for (const auto& kid : *kids->array) self(self, kid, depth + 1);
    } else if (!type || type->is_name("Page") || n.get("Contents")) {
      out.push_back(&n);
    }
  };
  if (const Object* pages = lookup(root_, "Pages")) {
    Object ref;
    const Object* raw = resolve(root_).get("Pages");
    walk(walk, raw ? *raw : *pages, 0);
  }
  if (out.empty()) {
    for (const auto& [num, e] : objects_) {
      const Object* type = e.object.get("Type");
      if (type && type->is_name("Page")) out.push_back(&e.object);
    }
  }
  return out;
}

// ------------------------------------------------------------------ fonts

// WinAnsiEncoding 0x80-0x9F; other bytes map to the same Latin-1 code point.
constexpr std::array<char16_t, 32> kWinAnsiHigh = {
    0x20AC, 0xFFFD, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021, 0x02C6, 0x2030, 0x0160,
    0x2039, 0x0152, 0xFFFD, 0x017D, 0xFFFD, 0xFFFD, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022,
    0x2013, 0x2014, 0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0xFFFD, 0x017E, 0x0178};

char32_t win_ansi(unsigned char b) {
  if (b >= 0x80 && b <= 0x9F) return kWinAnsiHigh[b - 0x80];
  return b;
}

std::optional<char32_t> glyph_to_unicode(std::string_view name) {
  if (name.size() == 1 && std::isalnum(static_cast<unsigned char>(name[0]))) {
    return static_cast<char32_t>(name[0]);
  }
  if (name.size() == 7 && name.substr(0, 3) == "uni") {
    char32_t v = 0;
    for (char c : name.substr(3)) {
      const int h = hex_value(c);
      if (h < 0) return std::nullopt;
      v = v * 16 + static_cast<char32_t>(h);
    }
    return v;
  }
  static const std::map<std::string_view, char32_t> kNames = {
      {"space", U' '},         {"exclam", U'!'},        {"quotedbl", U'"'},
      {"numbersign", U'#'},    {"dollar", U'$'},        {"percent", U'%'},
      {"ampersand", U'&'},     {"quotesingle", U'\''},  {"parenleft", U'('},
      {"parenright", U')'},    {"asterisk", U'*'},      {"plus", U'+'},
      {"comma", U','},         {"hyphen", U'-'},        {"period", U'.'},
      {"slash", U'/'},         {"zero", U'0'},          {"one", U'1'},
      {"two", U'2'},           {"three", U'3'},         {"four", U'4'},
      {"five", U'5'},          {"six", U'6'},           {"seven", U'7'},
      {"eight", U'8'},         {"nine", U'9'},          {"colon", U':'},
      {"semicolon", U';'},     {"less", U'<'},          {"equal", U'='},
      {"greater", U'>'},       {"question", U'?'},      {"at", U'@'},
      {"bracketleft", U'['},   {"backslash", U'\\'},    {"bracketright", U']'},
      {"underscore", U'_'},    {"quoteleft", 0x2018},   {"quoteright", 0x2019},
      {"quotedblleft", 0x201C}, {"quotedblright", 0x201D}, {"endash", 0x2013},
      {"emdash", 0x2014},      {"bullet", 0x2022},      {"ellipsis", 0x2026},
      {"fi", 0xFB01},          {"fl", 0xFB02},          {"ff", 0xFB00},
      {"ffi", 0xFB03},         {"ffl", 0xFB04},
  };
  auto it = kNames.find(name);
  if (it != kNames.end()) return it->second;
  return std::nullopt;
}

std::string utf16be_to_utf8(std::string_view bytes) {
  std::string out;
  for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
    char32_t u = (static_cast<unsigned char>(bytes[i]) << 8) | static_cast<unsigned char>(bytes[i + 1]);
    if (u >= 0xD800 && u <= 0xDBFF && i + 3 < bytes.size()) {
      const char32_t lo = (static_cast<unsigned char>(bytes[i + 2]) << 8) |
                          static_cast<unsigned char>(bytes[i + 3]);
      if (lo >= 0xDC00 && lo <= 0xDFFF) {
        u = 0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00);
        i += 2;
      }
    }
    if (u >= 0xD800 && u <= 0xDFFF) u = 0xFFFD;
    utf8::append(out, u);
  }
  return out;
}

std::uint32_t code_of(std::string_view bytes) {
  std::uint32_t v = 0;
  for (char c : bytes) v = (v << 8) | static_cast<unsigned char>(c);
  return v;
}

struct Font {
  int code_bytes = 1;
  std::map<std::uint32_t, std::string> to_unicode;
  std::map<int, char32_t> differences;
  std::map<int, double> widths;  // glyph space, 1/1000 em
  double default_width = 500.0;
  bool opaque_cid = false;  // two-byte font without a usable mapping
};

void parse_cmap(std::string_view cmap, Font& font) {
  Parser p(cmap);
  std::vector<Object> operands;
  while (auto o = p.parse()) {
    if (!o->is(Object::Type::Keyword)) {
      operands.push_back(std::move(*o));
      continue;
    }
    const std::string& op = o->text;
    if (op == "endcodespacerange" && !operands.empty() && operands[0].is(Object::Type::String)) {
      font.code_bytes = static_cast<int>(std::clamp<std::size_t>(operands[0].text.size(), 1, 4));
    } else if (op == "endbfchar") {
      for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
        if (operands[i].is(Object::Type::String) && operands[i + 1].is(Object::Type::String)) {
          font.to_unicode[code_of(operands[i].text)] = utf16be_to_utf8(operands[i + 1].text);
        }
      }
    } else if (op == "endbfrange") {
      for (std::size_t i = 0; i + 2 < operands.size(); i += 3) {
        const auto& lo = operands[i];
        const auto& hi = operands[i + 1];
        const auto& dst = operands[i + 2];
        if (!lo.is(Object::Type::String) || !hi.is(Object::Type::String)) continue;
        const std::uint32_t a = code_of(lo.text);
        const std::uint32_t b = code_of(hi.text);
        if (b < a || b - a > 0xFFFF) continue;
        if (dst.is(Object::Type::String) && !dst.text.empty()) {
          std::string base = dst.text;
          for (std::uint32_t c = a; c <= b; ++c) {
            font.to_unicode[c] = utf16be_to_utf8(base);
            // increment the last UTF-16 unit
            auto& last = base.back();
            last = static_cast<char>(static_cast<unsigned char>(last) + 1);
          }
        } else if (dst.is(Object::Type::Array)) {
          for (std::uint32_t c = a; c <= b && c - a < dst.array->size(); ++c) {
            const auto& d = (*dst.array)[c - a];
            if (d.is(Object::Type::String)) font.to_unicode[c] = utf16be_to_utf8(d.text);
          }
        }
      }
    }
    if (op.rfind("end", 0) == 0 || op.rfind("begin", 0) == 0) operands.clear();
  }
}

Font load_font(const Document& doc, const Object& font_ref) {
  Font font;
  const Object& f = doc.resolve(font_ref);
  if (!f.is(Object::Type::Dict)) return font;
  const Object* subtype = f.get("Subtype");
  const bool type0 = subtype && doc.resolve(*subtype).is_name("Type0");
  if (type0) font.code_bytes = 2;
  if (const Object* tu = f.get("ToUnicode")) {
    if (auto cmap = doc.stream(*tu)) parse_cmap(*cmap, font);
  }
  if (type0 && font.to_unicode.empty()) font.opaque_cid = true;
  if (type0) font.default_width = 1000.0;

  if (const Object* enc = doc.lookup(f, "Encoding"); enc && enc->is(Object::Type::Dict)) {
    if (const Object* diffs = doc.lookup(*enc, "Differences"); diffs && diffs->is(Object::Type::Array)) {
      int code = 0;
      for (const auto& item : *diffs->array) {
        if (item.is(Object::Type::Number)) {
          code = static_cast<int>(item.number);
        } else if (item.is(Object::Type::Name)) {
          if (auto u = glyph_to_unicode(item.text)) font.differences[code] = *u;
          ++code;
        }
      }
    }
  }
  const Object* first = doc.lookup(f, "FirstChar");
  const Object* widths = doc.lookup(f, "Widths");
  if (first && widths && widths->is(Object::Type::Array)) {
    int code = static_cast<int>(first->number);
    for (const auto& w : *widths->array) {
      const Object& wr = doc.resolve(w);
      if (wr.is(Object::Type::Number)) font.widths[code] = wr.number;
      ++code;
    }
  }
  return font;
}

// ------------------------------------------------------------------- text

struct Matrix {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  Matrix then(const Matrix& m) const {  // this * m
    return {a * m.a + b * m.c,       a * m.b + b * m.d,       c * m.a + d * m.c,
            c * m.b + d * m.d,       e * m.a + f * m.c + m.e, e * m.b + f * m.d + m.f};
  }
};

class TextCollector {
 public:
  // Appends shown text at baseline (x, y) in text space of the given size.
  void show(std::string_view text, double x, double y, double size, double advance) {
    if (text.empty()) return;
    size = size > 0 ? size : 1.0;
    if (!has_text_) {
      has_text_ = true;
    } else {
      const double dy = last_y_ - y;
      if (std::abs(dy) > 0.5 * std::min(size, last_size_)) {
        const double gap = dy;
        if (gap > 0 && gap < typical_gap_) typical_gap_ = gap;
        const bool paragraph =
            gap < 0 || gap > std::max(1.5 * std::max(size, last_size_), 1.3 * typical_gap_);
        end_line(paragraph);
      } else if (x - last_end_x_ > 0.15 * size && !current_.empty() && current_.back() != ' ' &&
                 text.front() != ' ') {
        current_.push_back(' ');
      }
    }
    current_.append(text);
    last_y_ = y;
    last_size_ = size;
    last_end_x_ = x + advance;
  }

  void space() {
    if (!current_.empty() && current_.back() != ' ') current_.push_back(' ');
  }

  void page_break() {
    if (has_text_) end_line(true);
    has_text_ = false;
    typical_gap_ = 1e9;
  }

  std::string finish() {
    page_break();
    // Trim line ends, collapse runs of blank lines, trim the whole.
    std::string out;
    std::size_t blank_run = 0;
    for (auto& line : lines_) {
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
      std::size_t b = 0;
      while (b < line.size() && line[b] == ' ') ++b;
      line.erase(0, b);
      if (line.empty()) {
        if (++blank_run > 1 || out.empty()) continue;
      } else {
        blank_run = 0;
      }
      out += line;
      out += '\n';
    }
    while (!out.empty() && (out.back() == '\n' || out.back() == ' ')) out.pop_back();
    return out;
  }

 private:
  void end_line(bool paragraph) {
    lines_.push_back(std::move(current_));
    current_.clear();
    if (paragraph) lines_.emplace_back();
  }

  std::vector<std::string> lines_;
  std::string current_;
  bool has_text_ = false;
  double last_y_ = 0;
  double last_size_ = 12;
  double last_end_x_ = 0;
  double typical_gap_ = 1e9;
};

class ContentInterpreter {
 public:
  ContentInterpreter(const Document& doc, TextCollector& out) : doc_(doc), out_(out) {}

  void run(std::string_view content, const Object* resources, int depth = 0) {
    if (depth > 8) return;
    std::map<std::string, Font, std::less<>> fonts;
    const Object* font_dict = resources ? doc_.lookup(*resources, "Font") : nullptr;
    Parser p(content);
    std::vector<Object> operands;
    Matrix tm, tlm;
    double leading = 0, size = 12, char_spacing = 0, word_spacing = 0, hscale = 1;
    const Font* font = nullptr;
    Font fallback;

    auto td = [&](double tx, double ty) {
      tlm = Matrix{1, 0, 0, 1, tx, ty}.then(tlm);
      tm = tlm;
    };
    auto num = [&](std::size_t i) {
      return i < operands.size() && operands[i].is(Object::Type::Number) ? operands[i].number
                                                                          : 0.0;
    };
    auto show = [&](const std::string& bytes) {
      const Font& f = font ? *font : fallback;
      if (f.opaque_cid) return;
      std::string text;
      double width = 0;
      for (std::size_t i = 0; i + f.code_bytes <= bytes.size(); i += f.code_bytes) {
        const std::uint32_t code = code_of(std::string_view(bytes).substr(i, f.code_bytes));
        if (auto it = f.to_unicode.find(code); it != f.to_unicode.end()) {
          text += it->second;
        } else if (f.code_bytes == 1) {
          auto d = f.differences.find(static_cast<int>(code));
          char32_t cp = d != f.differences.end() ? d->second : win_ansi(static_cast<unsigned char>(code));
          if (cp >= 0x20 || cp == '\t') utf8::append(text, cp == '\t' ? U' ' : cp);
        }
        auto w = f.widths.find(static_cast<int>(code));
        width += (w != f.widths.end() ? w->second : f.default_width) / 1000.0 * size +
                 char_spacing + (code == 32 && f.code_bytes == 1 ? word_spacing : 0.0);
      }
      const double scale_x = std::hypot(tm.a, tm.b);
      const double scale_y = std::hypot(tm.c, tm.d);
      const double advance = width * hscale * (scale_x > 0 ? scale_x : 1.0);
      out_.show(text, tm.e, tm.f, size * (scale_y > 0 ? scale_y : 1.0), advance);
      tm = Matrix{1, 0, 0, 1, width * hscale, 0}.then(tm);
    };

    while (auto o = p.parse()) {
      if (!o->is(Object::Type::Keyword)) {
        operands.push_back(std::move(*o));
        continue;
      }
      const std::string& op = o->text;
      if (op == "BT") {
        tm = tlm = Matrix{};
      } else if (op == "Tf" && operands.size() >= 2) {
        size = num(1);
        const std::string& name = operands[0].text;
        auto it = fonts.find(name);
        if (it == fonts.end()) {
          const Object* ref = font_dict ? font_dict->get(name) : nullptr;
          it = fonts.emplace(name, ref ? load_font(doc_, *ref) : Font{}).first;
        }
        font = &it->second;
      } else if (op == "Td") {
        td(num(0), num(1));
      } else if (op == "TD") {
        leading = -num(1);
        td(num(0), num(1));
      } else if (op == "Tm" && operands.size() >= 6) {
        tm = tlm = Matrix{num(0), num(1), num(2), num(3), num(4), num(5)};
      } else if (op == "T*") {
        td(0, -leading);
      } else if (op == "TL") {
        leading = num(0);
      } else if (op == "Tc") {
        char_spacing = num(0);
      } else if (op == "Tw") {
        word_spacing = num(0);
      } else if (op == "Tz") {
        hscale = num(0) / 100.0;
      } else if (op == "Tj" && !operands.empty() && operands.back().is(Object::Type::String)) {
        show(operands.back().text);
      } else if (op == "'" && !operands.empty()) {
        td(0, -leading);
        show(operands.back().text);
      } else if (op == "\"" && operands.size() >= 3) {
        word_spacing = num(0);
        char_spacing = num(1);
        td(0, -leading);
        show(operands[2].text);
      } else if (op == "TJ" && !operands.empty() && operands.back().is(Object::Type::Array)) {
        for (const auto& item : *operands.back().array) {
          if (item.is(Object::Type::String)) {
            show(item.text);
          } else if (item.is(Object::Type::Number)) {
            if (item.number < -250) out_.space();
            tm = Matrix{1, 0, 0, 1, -item.number / 1000.0 * size * hscale, 0}.then(tm);
          }
        }
      } else if (op == "Do" && !operands.empty() && resources) {
        run_form(operands.back().text, *resources, depth);
      } else if (op == "BI") {
        // Inline image: skip to EI.
        const std::size_t end = content.find("EI", p.pos());
        p.seek(end == std::string_view::npos ? content.size() : end + 2);
      }
      operands.clear();
    }
  }

 private:
  void run_form(const std::string& name, const Object& resources, int depth) {
    const Object* xobjects = doc_.lookup(resources, "XObject");
    const Object* ref = xobjects ? xobjects->get(name) : nullptr;
    if (!ref) return;
    const Object* dict = doc_.stream_dict(*ref);
    if (!dict) return;
    const Object* subtype = dict->get("Subtype");
    if (!subtype || !subtype->is_name("Form")) return;
    auto content = doc_.stream(*ref);
    if (!content) return;
    const Object* form_resources = doc_.lookup(*dict, "Resources");
    run(*content, form_resources ? form_resources : &resources, depth + 1);
  }

  const Document& doc_;
  TextCollector& out_;
};

const Object* inherited(const Document& doc, const Object& page, std::string_view key) {
  const Object* node = &page;
  for (int depth = 0; node && depth < 32; ++depth) {
    if (const Object* v = doc.lookup(*node, key)) return v;
    node = doc.lookup(*node, "Parent");
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(PdfFailure reason) {
  switch (reason) {
    case PdfFailure::Corrupt: return "corrupt";
    case PdfFailure::Encrypted: return "encrypted";
    case PdfFailure::NoTextLayer: return "no_text_layer";
    case PdfFailure::Unsupported: return "unsupported";
  }
  return "?";
}

bool looks_like_pdf(std::string_view bytes) {
  return bytes.substr(0, 1024).find("%PDF-") != std::string_view::npos;
}

std::string BuiltinPdfTextAdapter::extract(std::string_view bytes) const {
  if (!looks_like_pdf(bytes)) {
    throw PdfExtractionError(PdfFailure::Corrupt, "missing %PDF- header");
  }
  Document doc(bytes);
  if (doc.object_count() == 0) throw PdfExtractionError(PdfFailure::Corrupt, "no objects");
  if (doc.encrypted()) throw PdfExtractionError(PdfFailure::Encrypted, "document is encrypted");
  const auto pages = doc.pages();
  if (pages.empty()) throw PdfExtractionError(PdfFailure::Corrupt, "no pages");

  TextCollector collector;
  bool undecodable = false;
  for (const Object* page : pages) {
    const Object* resources = inherited(doc, *page, "Resources");
    const Object* contents = page->get("Contents");
    std::vector<Object> parts;
    if (contents) {
      const Object& c = doc.resolve(*contents);
      if (c.is(Object::Type::Array)) {
        parts = *c.array;
      } else {
        parts.push_back(*contents);
      }
    }
    std::string content;
    for (const auto& part : parts) {
      if (auto s = doc.stream(part)) {
        content += *s;
        content += '\n';
      } else if (doc.stream_dict(part)) {
        undecodable = true;
      }
    }
    ContentInterpreter(doc, collector).run(content, resources);
    collector.page_break();
  }
  std::string text = collector.finish();
  if (text.empty()) {
    if (undecodable) {
      throw PdfExtractionError(PdfFailure::Unsupported, "content stream uses an unsupported filter");
    }
    throw PdfExtractionError(PdfFailure::NoTextLayer, "no extractable text (image-only PDF?)");
  }
  if (utf8::first_invalid(text)) {
    throw PdfExtractionError(PdfFailure::Corrupt, "extracted text is not valid UTF-8");
  }
  return text;
}

const PdfTextAdapter& default_pdf_adapter() {
  static const BuiltinPdfTextAdapter adapter;
  return adapter;
}

std::string extract_pdf_text(std::string_view pdf_bytes) {
  return default_pdf_adapter().extract(pdf_bytes);
}

}  // namespace thoth
