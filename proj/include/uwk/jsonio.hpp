#pragma once

// Minimal JSON value builder with insertion-ordered object keys, so command
// output is deterministic byte for byte.

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "uwk/common.hpp"

namespace uwk::jsonio {

class Json {
 public:
  static Json num(Int v) {
    Json j;
    j.kind_ = Kind::number;
    j.num_ = v;
    return j;
  }
  static Json boolean(bool v) {
    Json j;
    j.kind_ = Kind::boolean;
    j.bool_ = v;
    return j;
  }
  static Json str(std::string v) {
    Json j;
    j.kind_ = Kind::string;
    j.str_ = std::move(v);
    return j;
  }
  static Json arr() {
    Json j;
    j.kind_ = Kind::array;
    return j;
  }
  static Json obj() {
    Json j;
    j.kind_ = Kind::object;
    return j;
  }
  static Json null() { return Json(); }

  Json& push(Json v) {
    items_.push_back(std::move(v));
    return *this;
  }
  Json& set(const std::string& key, Json v) {
    keys_.push_back(key);
    items_.push_back(std::move(v));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  enum class Kind { null_v, boolean, number, string, array, object };
  Kind kind_ = Kind::null_v;
  Int num_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<std::string> keys_;
  std::vector<Json> items_;

  static void escape(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out) const {
    switch (kind_) {
      case Kind::null_v: out += "null"; break;
      case Kind::boolean: out += bool_ ? "true" : "false"; break;
      case Kind::number: out += std::to_string(num_); break;
      case Kind::string: escape(out, str_); break;
      case Kind::array: {
        out += '[';
        for (size_t i = 0; i < items_.size(); ++i) {
          if (i) out += ',';
          items_[i].write(out);
        }
        out += ']';
        break;
      }
      case Kind::object: {
        out += '{';
        for (size_t i = 0; i < items_.size(); ++i) {
          if (i) out += ',';
          escape(out, keys_[i]);
          out += ':';
          items_[i].write(out);
        }
        out += '}';
        break;
      }
    }
  }
};

}  // namespace uwk::jsonio
