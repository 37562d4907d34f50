#include "circle_sobolev/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "circle_sobolev/error.hpp"

namespace circle_sobolev::io {

std::string format_real(double x) {
  if (x == 0.0) return "0";  // folds -0
  return fmt::format("{:.12g}", x);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Row {
  int line;
  std::vector<double> values;
};

// Comma-separated numeric rows; blank lines, '#' comments and a header whose
// first field is not numeric are skipped.
std::vector<Row> read_rows(std::istream& in, std::size_t columns, std::string* first_line = nullptr) {
  std::vector<Row> rows;
  std::string line;
  int number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (first && first_line != nullptr) {
      *first_line = line;
      first = false;
      continue;
    }
    first = false;
    std::vector<double> values;
    std::stringstream ss(line);
    std::string field;
    bool numeric = true;
    while (std::getline(ss, field, ',')) {
      field = trim(field);
      try {
        std::size_t used = 0;
        values.push_back(std::stod(field, &used));
        if (used != field.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (rows.empty()) continue;  // header
      throw Error(Errc::ParseError, "line " + std::to_string(number) + ": non-numeric field");
    }
    if (values.size() != columns) {
      throw Error(Errc::ParseError, "line " + std::to_string(number) + ": expected " +
                                        std::to_string(columns) + " columns");
    }
    rows.push_back({number, std::move(values)});
  }
  return rows;
}

int as_index(const Row& row, double v) {
  const auto i = static_cast<long long>(v);
  if (static_cast<double>(i) != v) {
    throw Error(Errc::ParseError, "line " + std::to_string(row.line) + ": index is not an integer");
  }
  return static_cast<int>(i);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

void write_coefficients(std::ostream& out, const FourierSeries& c) {
  out << "k,re,im\n";
  for (int k = -c.max_frequency(); k <= c.max_frequency(); ++k) {
    out << k << ',' << format_real(c[k].real()) << ',' << format_real(c[k].imag()) << '\n';
  }
}

FourierSeries read_coefficients(std::istream& in) {
  const auto rows = read_rows(in, 3);
  if (rows.empty()) throw Error(Errc::ParseError, "coefficient file has no rows");
  std::map<int, Complex> entries;
  int band = 0;
  for (const Row& row : rows) {
    const int k = as_index(row, row.values[0]);
    if (!entries.emplace(k, Complex(row.values[1], row.values[2])).second) {
      throw Error(Errc::ParseError, "line " + std::to_string(row.line) + ": duplicate frequency");
    }
    band = std::max(band, std::abs(k));
  }
  FourierSeries c(band);
  for (const auto& [k, v] : entries) c.at(k) = v;
  return c;
}

void write_grid(std::ostream& out, const GridFunction& f) {
  out << "N=" << f.size() << "\nj,re,im\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    out << j << ',' << format_real(f[j].real()) << ',' << format_real(f[j].imag()) << '\n';
  }
}

GridFunction read_grid(std::istream& in) {
  std::string header;
  const auto rows = read_rows(in, 3, &header);
  if (header.rfind("N=", 0) != 0) throw Error(Errc::ParseError, "grid file must start with N=<n>");
  std::size_t n = 0;
  try {
    n = static_cast<std::size_t>(std::stoul(header.substr(2)));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad grid size line '" + header + "'");
  }
  if (rows.size() != n) {
    throw Error(Errc::ParseError, "grid file declares N=" + std::to_string(n) + " but has " +
                                      std::to_string(rows.size()) + " rows");
  }
  std::vector<Complex> samples(n);
  std::vector<bool> seen(n, false);
  for (const Row& row : rows) {
    const int j = as_index(row, row.values[0]);
    if (j < 0 || static_cast<std::size_t>(j) >= n || seen[static_cast<std::size_t>(j)]) {
      throw Error(Errc::ParseError, "line " + std::to_string(row.line) + ": bad or repeated index");
    }
    seen[static_cast<std::size_t>(j)] = true;
    samples[static_cast<std::size_t>(j)] = Complex(row.values[1], row.values[2]);
  }
  return GridFunction(std::move(samples));
}

void write_homeomorphism(std::ostream& out, const CircleHomeomorphism& h) {
  out << "t,h\n";
  for (std::size_t i = 0; i < h.knot_count(); ++i) {
    out << format_real(h.knots_in()[i]) << ',' << format_real(h.knots_out()[i]) << '\n';
  }
}

CircleHomeomorphism read_homeomorphism(std::istream& in, Interpolation interpolation) {
  const auto rows = read_rows(in, 2);
  if (rows.empty()) throw Error(Errc::ParseError, "homeomorphism file has no knots");
  std::vector<double> t, h;
  for (const Row& row : rows) {
    t.push_back(row.values[0]);
    h.push_back(row.values[1]);
  }
  return CircleHomeomorphism(std::move(t), std::move(h), interpolation);
}

void write_measure(std::ostream& out, const DiscreteMeasure& m) {
  out << "theta,w\n";
  for (const Atom& a : m.atoms()) out << format_real(a.position) << ',' << format_real(a.weight) << '\n';
}

DiscreteMeasure read_measure(std::istream& in, bool probability) {
  const auto rows = read_rows(in, 2);
  std::vector<Atom> atoms;
  for (const Row& row : rows) atoms.push_back({row.values[0], row.values[1]});
  return probability ? DiscreteMeasure::probability(std::move(atoms))
                     : DiscreteMeasure::signed_measure(std::move(atoms));
}

FourierSeries load_coefficients(const std::string& path) {
  auto in = open(path);
  return read_coefficients(in);
}

GridFunction load_grid(const std::string& path) {
  auto in = open(path);
  return read_grid(in);
}

CircleHomeomorphism load_homeomorphism(const std::string& path, Interpolation interpolation) {
  auto in = open(path);
  return read_homeomorphism(in, interpolation);
}

DiscreteMeasure load_measure(const std::string& path, bool probability) {
  auto in = open(path);
  return read_measure(in, probability);
}

}  // namespace circle_sobolev::io
