#include "d2app/report.hpp"

#include <iomanip>
#include <ostream>

#include "d2/errors.hpp"

namespace d2app {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

nlohmann::ordered_json to_json(const d2::Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

CheckRecord& Report::run(std::string id, nlohmann::ordered_json params,
                         const std::function<void(CheckRecord&)>& body) {
  CheckRecord r;
  r.id = std::move(id);
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const d2::SizeGuardExceeded&) {
    throw;
  } catch (const d2::ParseError&) {
    throw;
  } catch (const d2::Error& e) {
    r.status = Status::Fail;
    r.note = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  checks_.push_back(std::move(r));
  return checks_.back();
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
  std::size_t c = 0;
  for (const auto& r : checks_) c += r.status == s;
  return c;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command_;
  j["status"] = passed() ? "pass" : "fail";
  j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skipped)}};
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : checks_) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["params"] = r.params;
    c["status"] = to_string(r.status);
    c["values"] = r.values;
    if (!r.note.empty()) c["note"] = r.note;
    c["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(c));
  }
  return j;
}

void Report::write_text(std::ostream& out) const {
  for (const auto& r : checks_) {
    out << std::left << std::setw(8) << ("[" + to_string(r.status) + "]") << ' ' << std::setw(28) << r.id;
    for (const auto& [k, v] : r.params.items()) out << ' ' << k << '=' << v.dump();
    if (!r.values.empty()) {
      out << "  ";
      bool first = true;
      for (const auto& [k, v] : r.values.items()) {
        out << (first ? "" : " ") << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
      }
    }
    out << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)";
    out.unsetf(std::ios::floatfield);
    if (!r.note.empty()) out << "\n         " << r.note;
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << ": " << count(Status::Pass) << " passed, " << count(Status::Fail)
      << " failed, " << count(Status::Skipped) << " skipped\n";
}

}  // namespace d2app
