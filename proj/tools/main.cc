// Copyright 2026 The RDFi Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rdfi: command-line front end for databases with existential literals.
//
// Exit codes: 0 success or "true", 1 "false", 2 usage, 3 malformed input,
// 4 solver error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rdfi/certain.h"
#include "rdfi/errors.h"
#include "rdfi/oracle.h"
#include "rdfi/parser.h"
#include "rdfi/query.h"
#include "rdfi/serialize.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitSolver = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Malformed or ill-typed input is reported separately from failures of the
// reasoning itself.
int ExitCodeFor(rdfi::ErrorCode code) {
  switch (code) {
    case rdfi::ErrorCode::kParse:
    case rdfi::ErrorCode::kIllFormedTriple:
    case rdfi::ErrorCode::kLanguageMismatch:
    case rdfi::ErrorCode::kUnknownDatatype:
    case rdfi::ErrorCode::kDegeneratePolygon:
    case rdfi::ErrorCode::kMissingDomain:
      return kExitInput;
    default:
      return kExitSolver;
  }
}

struct Options {
  std::string database;
  std::string query;
  std::string graph;
  std::string domain;
  std::string format = "text";
  bool require_wd = false;
};

rdfi::Database LoadDatabase(const Options& o) {
  return rdfi::ParseDatabase(ReadInput(o.database));
}

rdfi::Query LoadQuery(const Options& o) {
  rdfi::Query q = rdfi::ParseQuery(ReadInput(o.query));
  if (o.require_wd && !rdfi::CheckWellDesigned(rdfi::PatternOf(q))) {
    throw rdfi::Error(rdfi::ErrorCode::kUnsupportedFragment,
                      "query pattern is not well designed");
  }
  return q;
}

int RunValidate(const Options& o) {
  const rdfi::Database db = LoadDatabase(o);
  std::cout << "ok: " << db.graph().size() << " conditional triples, "
            << rdfi::ELiteralsOf(db).size() << " e-literals, language "
            << rdfi::LanguageName(db.language()) << "\n";
  return kExitTrue;
}

int RunQuery(const Options& o) {
  const rdfi::Database db = LoadDatabase(o);
  const rdfi::Query q = LoadQuery(o);
  const bool json = o.format == "json";
  if (const auto* s = std::get_if<rdfi::SelectQuery>(&q)) {
    const rdfi::SelectAnswer answer = rdfi::EvalSelect(*s, db);
    std::cout << (json ? rdfi::SerializeSelectJson(answer)
                       : rdfi::SerializeSelectText(answer));
  } else {
    const rdfi::Database answer =
        rdfi::EvalConstruct(std::get<rdfi::ConstructQuery>(q), db);
    std::cout << (json ? rdfi::SerializeConstructJson(answer)
                       : rdfi::SerializeDatabase(answer));
  }
  return kExitTrue;
}

int RunCertain(const Options& o) {
  const rdfi::Database db = LoadDatabase(o);
  const rdfi::Query q = LoadQuery(o);
  if (const auto* s = std::get_if<rdfi::SelectQuery>(&q)) {
    std::cout << rdfi::SerializeBindings(rdfi::SelectCertainAnswer(*s, db));
  } else {
    std::cout << rdfi::SerializeTriples(
        rdfi::CertainAnswer(std::get<rdfi::ConstructQuery>(q), db));
  }
  return kExitTrue;
}

int RunCert(const Options& o) {
  const rdfi::Database db = LoadDatabase(o);
  const rdfi::Query q = LoadQuery(o);
  const auto* c = std::get_if<rdfi::ConstructQuery>(&q);
  if (!c) throw UsageError("cert needs a CONSTRUCT query");
  const bool certain =
      rdfi::Certainty(*c, rdfi::ParseGraph(ReadInput(o.graph)), db);
  std::cout << (certain ? "true" : "false") << "\n";
  return certain ? kExitTrue : kExitFalse;
}

int RunWorlds(const Options& o) {
  const rdfi::Database db = LoadDatabase(o);
  const auto worlds =
      rdfi::EnumerateWorlds(db, rdfi::ParseDomainSpec(ReadInput(o.domain)));
  std::cout << rdfi::SerializeWorlds(worlds);
  return kExitTrue;
}

int RunOracleCertain(const Options& o) {
  const rdfi::Database db = LoadDatabase(o);
  const rdfi::Query q = LoadQuery(o);
  const rdfi::DomainSpec dom = rdfi::ParseDomainSpec(ReadInput(o.domain));
  if (const auto* s = std::get_if<rdfi::SelectQuery>(&q)) {
    std::cout << rdfi::SerializeBindings(rdfi::OracleCertainSelect(*s, db, dom));
  } else {
    std::cout << rdfi::SerializeTriples(rdfi::OracleCertainConstruct(
        std::get<rdfi::ConstructQuery>(q), db, dom));
  }
  return kExitTrue;
}

int RunCheckWd(const Options& o) {
  const rdfi::Query q = rdfi::ParseQuery(ReadInput(o.query));
  const bool wd = rdfi::CheckWellDesigned(rdfi::PatternOf(q));
  std::cout << (wd ? "well-designed" : "not well-designed") << "\n";
  return wd ? kExitTrue : kExitFalse;
}

int RunNormalize(const Options& o) {
  std::cout << rdfi::SerializeDatabase(rdfi::Normalize(LoadDatabase(o)));
  return kExitTrue;
}

int RunEqComplete(const Options& o) {
  std::cout << rdfi::SerializeDatabase(rdfi::EqComplete(LoadDatabase(o)));
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query RDF databases with existential literals"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto add = [&](const char* name, const char* help,
                 int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };
  auto db_arg = [&](CLI::App* sub) {
    sub->add_option("database", o.database, "database file or -")->required();
  };
  auto query_arg = [&](CLI::App* sub) {
    sub->add_option("query", o.query, "query file or -")->required();
    sub->add_flag("--require-wd", o.require_wd,
                  "reject patterns that are not well designed");
  };
  auto domain_arg = [&](CLI::App* sub) {
    sub->add_option("--domain", o.domain, "domain spec file")->required();
  };

  db_arg(add("validate", "check a database", RunValidate));

  CLI::App* query = add("query", "evaluate a query symbolically", RunQuery);
  db_arg(query);
  query_arg(query);
  query->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* certain = add("certain", "compute the certain answer", RunCertain);
  db_arg(certain);
  query_arg(certain);

  CLI::App* cert = add("cert", "decide whether a graph is certain", RunCert);
  db_arg(cert);
  query_arg(cert);
  cert->add_option("graph", o.graph, "ground triples file or -")->required();

  CLI::App* worlds = add("worlds", "list minimal possible worlds", RunWorlds);
  db_arg(worlds);
  domain_arg(worlds);

  CLI::App* oracle = add("oracle-certain",
                         "certain answer by world enumeration",
                         RunOracleCertain);
  db_arg(oracle);
  query_arg(oracle);
  domain_arg(oracle);

  CLI::App* check_wd =
      add("check-wd", "check that a pattern is well designed", RunCheckWd);
  check_wd->add_option("query", o.query, "query file or -")->required();

  db_arg(add("normalize", "merge triples with equal parts", RunNormalize));
  db_arg(add("eq-complete", "substitute forced e-literals", RunEqComplete));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run(o);
  } catch (const UsageError& e) {
    std::cerr << "rdfi: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rdfi::Error& e) {
    std::cerr << "rdfi: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}
