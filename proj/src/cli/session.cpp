#include "robba/cli/cli.hpp"

#include "robba/error.hpp"

#include <boost/algorithm/string.hpp>

#include <charconv>

namespace robba::cli {

namespace {

[[noreturn]] void config_error(const std::string& what, const std::string& where = {}) {
  throw Error(ErrorCategory::Parse, "config", what, where);
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) config_error(key + " expects an integer, got '" + value + "'");
  return out;
}

Rational parse_rational_value(const std::string& key, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const Error&) {
    config_error(key + " expects a rational a/b, got '" + value + "'");
  }
}

}  // namespace

EMode parse_backend(const std::string& text) {
  if (text == "equalchar" || text == "equal") return EMode::EqualChar;
  if (text == "mixed") return EMode::MixedCharPTypical;
  config_error("backend must be equalchar or mixed, got '" + text + "'");
}

std::string backend_name(EMode mode) { return mode == EMode::EqualChar ? "equalchar" : "mixed"; }

void SessionConfig::set(const std::string& key, const std::string& value) {
  if (key == "p") {
    p = parse_int(key, value);
  } else if (key == "q") {
    q = parse_int(key, value);
  } else if (key == "m") {
    m = parse_int(key, value);
  } else if (key == "modulus") {
    modulus.clear();
    std::vector<std::string> parts;
    boost::split(parts, value, boost::is_any_of(","));
    for (auto& part : parts) {
      boost::trim(part);
      if (!part.empty()) modulus.push_back(parse_int(key, part));
    }
  } else if (key == "t_exponent") {
    t_exponent = parse_rational_value(key, value);
  } else if (key == "tprec" || key == "default_tprec") {
    default_tprec = parse_rational_value(key, value);
  } else if (key == "wprec") {
    wprec = parse_int(key, value);
  } else if (key == "backend" || key == "e_mode") {
    e_mode = parse_backend(value);
  } else {
    config_error("unknown configuration key '" + key + "'");
  }
}

SessionConfig SessionConfig::parse(std::string_view text) {
  SessionConfig cfg;
  std::vector<std::string> lines;
  boost::split(lines, text, boost::is_any_of("\n"));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    boost::trim(line);
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(i + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) config_error("expected key = value", where);
    auto key = line.substr(0, eq);
    auto value = line.substr(eq + 1);
    boost::trim(key);
    boost::trim(value);
    try {
      cfg.set(key, value);
    } catch (const Error& e) {
      config_error(e.what(), where);
    }
  }
  return cfg;
}

RingPtr SessionConfig::ring() const {
  RingConfig rc;
  rc.field.p = p;
  rc.field.q = q;
  rc.field.m = m;
  rc.field.modulus = modulus;
  rc.field.t_exponent = t_exponent;
  rc.field.default_tprec = default_tprec;
  rc.e_mode = e_mode;
  rc.wprec = wprec;
  try {
    return RingContext::create(rc);
  } catch (const Error& e) {
    throw Error(ErrorCategory::Precondition, "bad_config", e.what(), "config");
  }
}

}  // namespace robba::cli
