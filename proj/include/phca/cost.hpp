#pragma once

// Labor cost of a staff set over the assessment window.

#include <vector>

#include "phca/model.hpp"

namespace phca {

// Salary mode: sum over researcher-years inside the window of the average
// salary of the rank held that year. YearsOnly mode: plain researcher-years.
double unit_cost(const std::vector<Researcher>& staff, const YearWindow& window, CostMode mode,
                 const SalarySchedule& salaries);

// Researchers with at least one employment year inside the window.
int staff_headcount(const std::vector<Researcher>& staff, const YearWindow& window);

}  // namespace phca
