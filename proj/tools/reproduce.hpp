#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hsg::repro {

struct Row {
  std::string id;       // "01" .. "18", "12b"
  std::string topic;    // filter key
  std::string title;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct Criterion {
  std::string id;
  std::string topic;
  std::string title;
  std::function<Row()> run;
};

const std::vector<Criterion>& criteria();
std::vector<std::string> topics();
// Runs one criterion; exceptions become failing rows.
Row run_criterion(const Criterion& c);
// Runs every criterion whose topic (or id) matches one of the filters; empty means all.
std::vector<Row> run_all(const std::vector<std::string>& filters);

}  // namespace hsg::repro
