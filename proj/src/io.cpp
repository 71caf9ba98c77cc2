#include "hodge/io.hpp"

#include <sstream>

namespace hodge::io {

Arrangement parse_arrangement(std::string_view text) {
  std::vector<LinearForm> forms;
  std::size_t width = 0;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Rational> coeffs;
    std::string token;
    while (fields >> token) {
      try {
        coeffs.push_back(parse_rational(token));
      } catch (const Error&) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": malformed rational '" + token + "'");
      }
    }
    if (coeffs.empty()) continue;
    if (forms.empty()) width = coeffs.size();
    if (coeffs.size() != width)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                                             " coefficients, found " + std::to_string(coeffs.size()));
    forms.emplace_back(std::move(coeffs));
  }
  if (forms.empty()) throw Error(ErrorCode::EmptyArrangement, "no hyperplanes in input");
  return validate_arrangement(std::move(forms), static_cast<int>(width));
}

std::string format_arrangement(const Arrangement& arr) {
  std::string out;
  for (const auto& f : arr.forms()) {
    for (std::size_t j = 0; j < f.dimension(); ++j) {
      if (j) out += ' ';
      out += format_rational(f.coeffs()[j]);
    }
    out += '\n';
  }
  return out;
}

namespace {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

std::string join(const IndexSet& hs) {
  std::string out;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(hs[k]);
  }
  return out;
}

}  // namespace

std::string spectrum_text(const Spectrum& sp) {
  std::string out;
  for (const auto& [alpha, n] : sp.entries()) out += format_rational(alpha) + " " + n.get_str() + "\n";
  return out;
}

Json spectrum_json(const Spectrum& sp) {
  Json entries = Json::array();
  for (const auto& [alpha, n] : sp.entries()) {
    Json e;
    e["alpha"] = format_rational(alpha);
    e["n"] = integer_json(n);
    entries.push_back(std::move(e));
  }
  Json j;
  j["degree"] = sp.degree();
  j["ambient"] = sp.ambient();
  j["spectrum"] = std::move(entries);
  return j;
}

std::string lattice_text(const Lattice& lattice) {
  std::string out;
  for (int k = 1; k <= lattice.rank(); ++k)
    for (const auto& f : lattice.codim(k))
      out += "codim=" + std::to_string(k) + " m=" + std::to_string(f.multiplicity()) + " hyperplanes=" +
             join(f.hyperplanes) + "\n";
  return out;
}

Json lattice_json(const Arrangement& arr, const Lattice& lattice) {
  Json flats = Json::array();
  for (int k = 1; k <= lattice.rank(); ++k)
    for (const auto& f : lattice.codim(k)) {
      Json e;
      e["codim"] = k;
      e["multiplicity"] = f.multiplicity();
      e["hyperplanes"] = f.hyperplanes;
      flats.push_back(std::move(e));
    }
  Json j;
  j["degree"] = arr.degree();
  j["ambient"] = arr.ambient();
  j["rank"] = lattice.rank();
  j["flats"] = std::move(flats);
  return j;
}

std::string dense_text(const Arrangement& arr, const Lattice& lattice) {
  std::string out;
  for (int k = 2; k <= lattice.rank(); ++k)
    for (const auto& f : lattice.codim(k))
      out += "codim=" + std::to_string(k) + " m=" + std::to_string(f.multiplicity()) + " hyperplanes=" +
             join(f.hyperplanes) + " dense=" + (is_dense(arr, f) ? "yes" : "no") +
             " nnc=" + (is_nnc(f) ? "yes" : "no") + "\n";
  return out;
}

Json dense_json(const Arrangement& arr, const Lattice& lattice) {
  Json edges = Json::array();
  for (int k = 2; k <= lattice.rank(); ++k)
    for (const auto& f : lattice.codim(k)) {
      Json e;
      e["codim"] = k;
      e["multiplicity"] = f.multiplicity();
      e["hyperplanes"] = f.hyperplanes;
      e["dense"] = is_dense(arr, f);
      e["nnc"] = is_nnc(f);
      edges.push_back(std::move(e));
    }
  Json j;
  j["degree"] = arr.degree();
  j["ambient"] = arr.ambient();
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace hodge::io
