#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mlab {

// Named bounded test functions.  Registration keeps experiment reports
// reproducible: a report refers to "x2", never to an ad-hoc lambda.
// sup_norm is the declared bound on the working state range [-8, 8] (the
// 1-d examples stay well inside it at desk-scale horizons).
struct Observable1D {
    std::string name;
    std::function<double(double)> f;
    double sup_norm;
};

const Observable1D& observable(std::string_view name);
std::vector<std::string> observable_names();

// C^2 away from 0 with one-sided first derivatives at 0; the test-function
// class of the sticky/absorbing generator comparisons.
struct C2Function {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> d1;  // x != 0
    std::function<double(double)> d2;  // x != 0
    double d1_plus0;
    double d1_minus0;
};

const C2Function& c2_function(std::string_view name);
std::vector<std::string> c2_function_names();

// quintic smoothstep: 0 at tau<=0, 1 at tau>=1, C^2 junctions
double smoothstep5(double tau);
double smoothstep5_d1(double tau);
double smoothstep5_d2(double tau);

}  // namespace mlab
