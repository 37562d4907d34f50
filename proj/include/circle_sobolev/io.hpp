#pragma once

#include <iosfwd>
#include <string>

#include "circle_sobolev/families.hpp"
#include "circle_sobolev/fourier.hpp"
#include "circle_sobolev/homeomorphism.hpp"

namespace circle_sobolev::io {

/// 12 significant digits, the fixed format of every emitted number.
std::string format_real(double x);

// Coefficient file: header "k,re,im", one row per frequency.
void write_coefficients(std::ostream& out, const FourierSeries& c);
FourierSeries read_coefficients(std::istream& in);

// Grid function file: "N=<n>", header "j,re,im", one row per sample.
void write_grid(std::ostream& out, const GridFunction& f);
GridFunction read_grid(std::istream& in);

// Homeomorphism file: header "t,h", one (t_i, h(t_i)) row per knot.
// Strict monotonicity is validated on load.
void write_homeomorphism(std::ostream& out, const CircleHomeomorphism& h);
CircleHomeomorphism read_homeomorphism(std::istream& in,
                                       Interpolation interpolation = Interpolation::Linear);

// Measure file: header "theta,w", one atom per row.
void write_measure(std::ostream& out, const DiscreteMeasure& m);
DiscreteMeasure read_measure(std::istream& in, bool probability = true);

FourierSeries load_coefficients(const std::string& path);
GridFunction load_grid(const std::string& path);
CircleHomeomorphism load_homeomorphism(const std::string& path,
                                       Interpolation interpolation = Interpolation::Linear);
DiscreteMeasure load_measure(const std::string& path, bool probability = true);

}  // namespace circle_sobolev::io
