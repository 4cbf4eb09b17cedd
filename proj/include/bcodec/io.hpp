#ifndef BCODEC_IO_HPP_
#define BCODEC_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "bcodec/experiments.hpp"
#include "bcodec/schuetzenberger.hpp"
#include "bcodec/tableau.hpp"

namespace bcodec::io {

// 17 significant digits, enough to round-trip any double.
std::string format_real(double v);

// {"shape":[r1,r2,...],"rows":[[...],...]}
std::string to_json(const StandardTableau& t);
std::string to_json(const RealTableau& t);
std::string to_json(const Nerve& nerve);

// Throw Error(ParseError) on malformed JSON or a shape that disagrees with
// the rows, and Error(InvalidTableau) when the filling is not valid.
StandardTableau parse_standard_tableau(const std::string& json);
RealTableau parse_real_tableau(const std::string& json);

// Whitespace-separated reals.
std::vector<double> read_reals(std::istream& in);

// Header row: trial,seed,n, then the measurement names of the first record.
void write_csv(std::ostream& out, const ExperimentResult& result);
// Array of {"trial","seed","n","measurements":{...}} objects.
void write_json(std::ostream& out, const ExperimentResult& result);

}  // namespace bcodec::io

#endif  // BCODEC_IO_HPP_
