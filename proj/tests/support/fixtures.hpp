#pragma once

#include <string>

namespace simvote::testing {

// Similarity matrix for the COUNTRY domain.
inline const std::string kCountryCsv =
    ",Canada,USA,Mexico,Colombia,Venezuela,Australia,N.ZInd\n"
    "Canada,1.0,0.8,0.8,0.4,0.4,0.0,0.0\n"
    "USA,0.8,1.0,0.8,0.4,0.4,0.0,0.0\n"
    "Mexico,0.8,0.8,1.0,0.4,0.4,0.0,0.0\n"
    "Colombia,0.4,0.4,0.4,1.0,0.8,0.0,0.0\n"
    "Venezuela,0.4,0.4,0.4,0.8,1.0,0.0,0.0\n"
    "Australia,0.0,0.0,0.0,0.0,0.0,1.0,0.8\n"
    "N.ZInd,0.0,0.0,0.0,0.0,0.0,0.8,1.0\n";

// Same matrix with s(Canada,Colombia) = s(Colombia,Canada) = 0.9.
inline const std::string kPerturbedCountryCsv =
    ",Canada,USA,Mexico,Colombia,Venezuela,Australia,N.ZInd\n"
    "Canada,1.0,0.8,0.8,0.9,0.4,0.0,0.0\n"
    "USA,0.8,1.0,0.8,0.4,0.4,0.0,0.0\n"
    "Mexico,0.8,0.8,1.0,0.4,0.4,0.0,0.0\n"
    "Colombia,0.9,0.4,0.4,1.0,0.8,0.0,0.0\n"
    "Venezuela,0.4,0.4,0.4,0.8,1.0,0.0,0.0\n"
    "Australia,0.0,0.0,0.0,0.0,0.0,1.0,0.8\n"
    "N.ZInd,0.0,0.0,0.0,0.0,0.0,0.8,1.0\n";

enum Country : std::size_t { Canada, USA, Mexico, Colombia, Venezuela, Australia, NZInd };

}  // namespace simvote::testing
