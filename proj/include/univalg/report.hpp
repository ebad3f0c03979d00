#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace univalg {

/// One verified identity: which check, at which 1-based indices, and a
/// rendering of the witness (the difference of both sides, "0" on success).
struct ReportItem {
  std::string check;
  std::vector<std::size_t> location;
  std::string witness;
  bool ok = true;
};

/// Ordered list of checks. Validators record only violations, so an empty
/// validator report means "valid"; certificate builders record every check.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<ReportItem>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  bool passed() const;
  std::size_t failures() const;

  void add(ReportItem item) { items_.push_back(std::move(item)); }
  void pass(std::string check, std::vector<std::size_t> location) {
    items_.push_back({std::move(check), std::move(location), "0", true});
  }
  void fail(std::string check, std::vector<std::size_t> location, std::string witness) {
    items_.push_back({std::move(check), std::move(location), std::move(witness), false});
  }
  /// Records a check whose witness is `witness`; ok iff witness == "0".
  void record(std::string check, std::vector<std::size_t> location, std::string witness);
  void append(const Report& other);

 private:
  std::string title_;
  std::vector<ReportItem> items_;
};

/// Plain-text rendering, one line per item, followed by a status line.
void write_report(std::ostream& os, const Report& report);

}  // namespace univalg
