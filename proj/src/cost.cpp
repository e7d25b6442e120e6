#include "phca/cost.hpp"

namespace phca {

double unit_cost(const std::vector<Researcher>& staff, const YearWindow& window, CostMode mode,
                 const SalarySchedule& salaries) {
    double total = 0.0;
    for (const auto& r : staff) {
        for (const auto& [year, rank] : r.employment) {
            if (!window.contains(year)) continue;
            if (mode == CostMode::YearsOnly) {
                total += 1.0;
            } else {
                auto it = salaries.salary_by_rank.find(rank);
                if (it == salaries.salary_by_rank.end())
                    throw MissingSalaryError("rank " + rank + " of researcher " +
                                             r.researcher_id + " is not priced");
                total += it->second;
            }
        }
    }
    return total;
}

int staff_headcount(const std::vector<Researcher>& staff, const YearWindow& window) {
    int count = 0;
    for (const auto& r : staff)
        for (const auto& [year, rank] : r.employment)
            if (window.contains(year)) {
                ++count;
                break;
            }
    return count;
}

}  // namespace phca
