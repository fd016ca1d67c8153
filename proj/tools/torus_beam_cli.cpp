// SPDX-License-Identifier: Apache-2.0
//
// torus-beam: phase-only passive beamforming for RIS-assisted MISO links
// Copyright (C) 2026 The torus-beam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// torus-beam command line: one subcommand per experiment. Everything goes
// through the C API of libtorus_beam.

#include "CLI11.hpp"
#include "torus_beam/torus_beam.h"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Subcommand {
  const char* name;
  const char* help;
};

constexpr Subcommand kSubcommands[] = {
    {"snr", "RA vs MO objective and SNR over N and n_t"},
    {"time", "RA vs MO wall time over N and n_t"},
    {"ratio-k1", "RA/MO objective ratio over K1"},
    {"ratio-nt", "RA/MO objective ratio over n_t"},
    {"spike", "leading eigenvalue of R/N against its large-system limit"},
    {"oracle", "RA and MO against exhaustive search on small N"},
};

int fail(const char* what, tb_status status) {
  std::cerr << "torus-beam: " << what << ": " << tb_status_string(status) << ": "
            << tb_last_error() << "\n";
  return status == TB_ERR_INVALID_ARGUMENT ? 2 : 1;
}

std::string key_list() {
  std::string out = "Configuration keys (config file or --key value):\n ";
  for (size_t i = 0; i < tb_config_key_count(); ++i)
    out += std::string(" ") + tb_config_key(i);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-only RIS beamforming experiments (relaxation algorithm vs manifold "
               "ascent vs exhaustive search)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tb_version()));

  std::string config_path, out_path, format;
  for (const Subcommand& s : kSubcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config_path, "flat 'key = value' configuration file");
    sub->add_option("--out", out_path, "output path, '-' for standard output");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->allow_extras();
    sub->footer(key_list());
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  const std::string kind = chosen->get_name();

  tb_experiment* exp = nullptr;
  if (tb_status st = tb_experiment_create(kind.c_str(), &exp); st != TB_OK)
    return fail("create experiment", st);

  auto cleanup = [&](int code) {
    tb_experiment_free(exp);
    return code;
  };

  if (!config_path.empty()) {
    if (tb_status st = tb_experiment_load_config(exp, config_path.c_str()); st != TB_OK)
      return cleanup(fail("load config", st));
    if (kind != tb_experiment_kind(exp)) {
      std::cerr << "torus-beam: config file selects experiment '" << tb_experiment_kind(exp)
                << "' but the subcommand is '" << kind << "'\n";
      return cleanup(2);
    }
  }

  // Remaining tokens are --key value or --key=value overrides.
  const std::vector<std::string> extras = chosen->remaining();
  for (size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() == 2) {
      std::cerr << "torus-beam: unexpected argument '" << tok << "'\n";
      return cleanup(2);
    }
    std::string key = tok.substr(2), value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else if (i + 1 < extras.size()) {
      value = extras[++i];
    } else {
      std::cerr << "torus-beam: option --" << key << " needs a value\n";
      return cleanup(2);
    }
    if (key == "experiment") {
      std::cerr << "torus-beam: the experiment is chosen by the subcommand\n";
      return cleanup(2);
    }
    if (tb_status st = tb_experiment_set(exp, key.c_str(), value.c_str()); st != TB_OK)
      return cleanup(fail("option", st));
  }
  if (!out_path.empty())
    if (tb_status st = tb_experiment_set(exp, "out", out_path.c_str()); st != TB_OK)
      return cleanup(fail("--out", st));
  if (!format.empty())
    if (tb_status st = tb_experiment_set(exp, "format", format.c_str()); st != TB_OK)
      return cleanup(fail("--format", st));

  if (tb_status st = tb_experiment_validate(exp); st != TB_OK)
    return cleanup(fail("config", st));

  tb_table* table = nullptr;
  if (tb_status st = tb_experiment_run(exp, &table); st != TB_OK)
    return cleanup(fail("run", st));
  const tb_status written = tb_table_write_configured(table, exp);
  const size_t rows = tb_table_rows(table);
  tb_table_free(table);
  if (written != TB_OK)
    return cleanup(fail("write", written));

  std::cerr << "torus-beam: " << kind << ": " << rows << " row(s) written\n";
  return cleanup(0);
}
