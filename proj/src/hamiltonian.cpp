// Copyright 2026 The vqebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqebench/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "vqebench/errors.hpp"

namespace vqebench {
namespace {

constexpr double kSymmetryTol = 1e-10;

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n,");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n,");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string tok, double& out) {
  for (auto& c : tok) {
    if (c == 'D' || c == 'd') c = 'E';
  }
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_long(const std::string& tok, long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

struct Header {
  long norb = -1;
  long nelec = -1;
  long ms2 = 0;
};

Header parse_namelist(const std::string& text, std::size_t line) {
  std::string body = text;
  const std::string up = upper(body);
  const auto start = up.find("&FCI");
  if (start == std::string::npos) throw ParseError("FCIDUMP header must start with &FCI", line);
  body = body.substr(start + 4);

  Header h;
  static const std::regex key_re(R"(([A-Za-z_][A-Za-z0-9_]*)\s*=)");
  std::vector<std::smatch> keys;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), key_re);
       it != std::sregex_iterator(); ++it) {
    keys.push_back(*it);
  }
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto vstart = static_cast<std::size_t>(keys[k].position(0) + keys[k].length(0));
    const auto vend = k + 1 < keys.size() ? static_cast<std::size_t>(keys[k + 1].position(0))
                                          : body.size();
    const std::string name = upper(keys[k].str(1));
    const std::string value = trim(body.substr(vstart, vend - vstart));
    auto as_int = [&](long& dst) {
      if (!parse_long(value, dst)) {
        throw ParseError("header field " + name + " is not an integer: '" + value + "'", line);
      }
    };
    if (name == "NORB") {
      as_int(h.norb);
    } else if (name == "NELEC") {
      as_int(h.nelec);
    } else if (name == "MS2") {
      as_int(h.ms2);
    }
    // ORBSYM, ISYM and anything else are accepted and ignored.
  }
  if (h.norb < 1) throw ParseError("header is missing a positive NORB", line);
  if (h.nelec < 0) throw ParseError("header is missing NELEC", line);
  return h;
}

}  // namespace

MolecularHamiltonian MolecularHamiltonian::zeros(std::size_t n_spatial,
                                                 std::size_t n_electrons) {
  MolecularHamiltonian m;
  m.n_spatial = n_spatial;
  m.n_electrons = n_electrons;
  m.h1 = Eigen::MatrixXd::Zero(n_spatial, n_spatial);
  m.h2.assign(n_spatial * n_spatial * n_spatial * n_spatial, 0.0);
  return m;
}

void MolecularHamiltonian::set_eri(std::size_t i, std::size_t j, std::size_t k,
                                   std::size_t l, double v) {
  for (auto [a, b, c, d] : {std::array{i, j, k, l}, std::array{j, i, k, l},
                            std::array{i, j, l, k}, std::array{j, i, l, k},
                            std::array{k, l, i, j}, std::array{l, k, i, j},
                            std::array{k, l, j, i}, std::array{l, k, j, i}}) {
    h2[eri_index(a, b, c, d)] = v;
  }
}

void MolecularHamiltonian::validate() const {
  const std::size_t n = n_spatial;
  if (n == 0) throw IntegrityError("Hamiltonian has no orbitals");
  if (n_electrons == 0 || n_electrons > 2 * n) {
    throw IntegrityError("electron count " + std::to_string(n_electrons) +
                         " outside (0, 2*NORB]");
  }
  if (h1.rows() != static_cast<Eigen::Index>(n) || h1.cols() != static_cast<Eigen::Index>(n) ||
      h2.size() != n * n * n * n) {
    throw IntegrityError("integral tensor shapes do not match NORB");
  }
  if ((h1 - h1.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw IntegrityError("one-electron integrals are not symmetric");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = eri(i, j, k, l);
          if (std::abs(v - eri(j, i, k, l)) > kSymmetryTol ||
              std::abs(v - eri(i, j, l, k)) > kSymmetryTol ||
              std::abs(v - eri(k, l, i, j)) > kSymmetryTol) {
            throw IntegrityError("two-electron integrals lack 8-fold symmetry");
          }
        }
}

MolecularHamiltonian parse_fcidump(std::istream& in, std::string label) {
  std::string line;
  std::size_t line_no = 0;
  std::string header_text;
  std::size_t header_line = 0;
  bool header_closed = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() && header_text.empty()) continue;
    if (header_text.empty()) header_line = line_no;
    const std::string up = upper(line);
    const auto end_pos = up.find("&END");
    if (end_pos != std::string::npos) {
      header_text += line.substr(0, end_pos);
      header_closed = true;
      break;
    }
    const std::string t = trim(line);
    if (!t.empty() && t.back() == '/') {
      header_text += t.substr(0, t.size() - 1);
      header_closed = true;
      break;
    }
    header_text += line + "\n";
  }
  if (!header_closed) {
    throw ParseError("FCIDUMP header is not terminated by &END or /",
                     header_line == 0 ? 1 : header_line);
  }
  const Header h = parse_namelist(header_text, header_line);
  const auto n = static_cast<std::size_t>(h.norb);
  if (h.nelec < 1 || static_cast<std::size_t>(h.nelec) > 2 * n) {
    throw ParseError("NELEC must lie in [1, 2*NORB]", header_line);
  }

  MolecularHamiltonian m = MolecularHamiltonian::zeros(n, static_cast<std::size_t>(h.nelec));
  m.ms2 = static_cast<int>(h.ms2);
  m.label = std::move(label);
  std::vector<char> h1_set(n * n, 0), h2_set(n * n * n * n, 0);
  bool core_set = false;

  auto check_dup = [&](bool already, double existing, double v) {
    if (already && std::abs(existing - v) > kSymmetryTol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "line " << line_no << ": record " << v
          << " conflicts with an earlier symmetry-equivalent value " << existing;
      throw IntegrityError(msg.str());
    }
    return already;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5) {
      throw ParseError("expected 'value i j k l', got " + std::to_string(tok.size()) + " fields",
                       line_no);
    }
    double v = 0.0;
    if (!parse_double(tok[0], v)) throw ParseError("bad integral value '" + tok[0] + "'", line_no);
    long idx[4];
    for (int a = 0; a < 4; ++a) {
      if (!parse_long(tok[a + 1], idx[a])) {
        throw ParseError("bad orbital index '" + tok[a + 1] + "'", line_no);
      }
    }
    auto in_range = [&](long x) { return x >= 1 && x <= h.norb; };
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      check_dup(core_set, m.core_energy, v);
      if (!core_set) m.core_energy = v;
      core_set = true;
    } else if (k == 0 && l == 0) {
      if (!in_range(i) || !in_range(j)) {
        throw ParseError("orbital index out of range [1, NORB]", line_no);
      }
      const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
      if (!check_dup(h1_set[a * n + b], m.h1(a, b), v)) {
        m.h1(a, b) = m.h1(b, a) = v;
        h1_set[a * n + b] = h1_set[b * n + a] = 1;
      }
    } else {
      if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(l)) {
        throw ParseError("orbital index out of range [1, NORB]", line_no);
      }
      const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1),
                 c = static_cast<std::size_t>(k - 1), d = static_cast<std::size_t>(l - 1);
      const auto slot = m.eri_index(a, b, c, d);
      if (!check_dup(h2_set[slot], m.h2[slot], v)) {
        m.set_eri(a, b, c, d, v);
        for (auto s : {m.eri_index(a, b, c, d), m.eri_index(b, a, c, d), m.eri_index(a, b, d, c),
                       m.eri_index(b, a, d, c), m.eri_index(c, d, a, b), m.eri_index(d, c, a, b),
                       m.eri_index(c, d, b, a), m.eri_index(d, c, b, a)}) {
          h2_set[s] = 1;
        }
      }
    }
  }
  return m;
}

MolecularHamiltonian parse_fcidump_text(const std::string& text, std::string label) {
  std::istringstream in(text);
  return parse_fcidump(in, std::move(label));
}

MolecularHamiltonian read_fcidump(const std::filesystem::path& path, std::string label) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open FCIDUMP file " + path.string());
  try {
    return parse_fcidump(in, label.empty() ? path.filename().string() : std::move(label));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  } catch (const IntegrityError& e) {
    throw IntegrityError(path.string() + ": " + e.what());
  }
}

std::string write_fcidump(const MolecularHamiltonian& m) {
  const std::size_t n = m.n_spatial;
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, " &FCI NORB=%zu,NELEC=%zu,MS2=%d,\n  ORBSYM=", n,
                m.n_electrons, m.ms2);
  out += buf;
  for (std::size_t i = 0; i < n; ++i) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  auto record = [&](double v, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::snprintf(buf, sizeof buf, "%.17g %zu %zu %zu %zu\n", v, i, j, k, l);
    out += buf;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k <= i; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = m.eri(i, j, k, l);
          if (v != 0.0) record(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (m.h1(i, j) != 0.0) record(m.h1(i, j), i + 1, j + 1, 0, 0);
    }
  record(m.core_energy, 0, 0, 0, 0);
  return out;
}

FermionHamiltonian to_fermion_hamiltonian(const MolecularHamiltonian& m) {
  const std::size_t n = m.n_spatial;
  const std::size_t ns = 2 * n;
  FermionHamiltonian out{FermionOperator(ns), m.core_energy};
  auto spatial = [](std::size_t p) { return p / 2; };
  auto spin = [](std::size_t p) { return p % 2; };

  for (std::size_t p = 0; p < ns; ++p) {
    for (std::size_t q = 0; q < ns; ++q) {
      if (spin(p) != spin(q)) continue;
      const double h = m.h1(spatial(p), spatial(q));
      if (h != 0.0) out.op.add({create(p), annihilate(q)}, h);
    }
  }
  for (std::size_t p = 0; p < ns; ++p)
    for (std::size_t q = 0; q < ns; ++q) {
      if (p == q) continue;
      for (std::size_t r = 0; r < ns; ++r) {
        if (spin(r) != spin(p)) continue;
        for (std::size_t s = 0; s < ns; ++s) {
          if (s == r || spin(s) != spin(q)) continue;
          // <pq|rs> = (pr|qs)
          const double v = m.eri(spatial(p), spatial(r), spatial(q), spatial(s));
          if (v == 0.0) continue;
          out.op.add({create(p), create(q), annihilate(s), annihilate(r)}, 0.5 * v);
        }
      }
    }
  return out;
}

QubitHamiltonian qubit_hamiltonian(const MolecularHamiltonian& m) {
  const auto fh = to_fermion_hamiltonian(m);
  return {jordan_wigner(fh.op), fh.core_energy, m.n_electrons};
}

}  // namespace vqebench
