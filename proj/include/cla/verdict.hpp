#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cla {

/// Outcome of a structural check. A failing verdict carries one witness
/// string per violation found (checks may cap how many they collect).
struct Verdict {
  bool pass = true;
  std::vector<std::string> witnesses;

  static Verdict ok() { return Verdict{}; }

  static Verdict fail(std::string witness) {
    Verdict v;
    v.pass = false;
    v.witnesses.push_back(std::move(witness));
    return v;
  }

  void add_failure(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }

  // and-combine, keeping all witnesses
  void merge(const Verdict& other) {
    pass = pass && other.pass;
    witnesses.insert(witnesses.end(), other.witnesses.begin(),
                     other.witnesses.end());
  }

  std::string detail() const {
    std::string s;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) s += "; ";
      s += witnesses[i];
    }
    return s;
  }

  explicit operator bool() const { return pass; }
};

}  // namespace cla
