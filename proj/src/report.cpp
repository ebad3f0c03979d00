#include "univalg/report.hpp"

#include <algorithm>

namespace univalg {

bool Report::passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const ReportItem& i) { return i.ok; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const ReportItem& i) { return !i.ok; }));
}

void Report::record(std::string check, std::vector<std::size_t> location, std::string witness) {
  const bool ok = witness == "0";
  items_.push_back({std::move(check), std::move(location), std::move(witness), ok});
}

void Report::append(const Report& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

void write_report(std::ostream& os, const Report& report) {
  if (!report.title().empty()) os << "# report: " << report.title() << "\n";
  for (const auto& item : report.items()) {
    os << (item.ok ? "ok   " : "FAIL ") << item.check << " (";
    for (std::size_t k = 0; k < item.location.size(); ++k) os << (k ? "," : "") << item.location[k];
    os << ") witness: " << item.witness << "\n";
  }
  os << "status: " << (report.passed() ? "pass" : "fail") << " (" << report.items().size()
     << " checks, " << report.failures() << " failed)\n";
}

}  // namespace univalg
