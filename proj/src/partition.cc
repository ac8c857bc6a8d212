// Copyright 2026 The symmix Authors.
//
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

#include "symmix/partition.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <string>

#include "symmix/errors.h"

namespace symmix {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw DomainError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
    weight_ += parts_[i];
  }
}

Partition Partition::Parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) {
    s = trim(s);
    int value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
      throw DomainError("malformed partition: '" + std::string(text) + "'");
    }
    return value;
  };

  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') {
      throw DomainError("malformed partition: '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
  }

  std::vector<int> parts;
  while (!body.empty()) {
    size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    size_t caret = item.find('^');
    int value = number(item.substr(0, caret));
    int repeat = caret == std::string_view::npos ? 1 : number(item.substr(caret + 1));
    if (value < 1 || repeat < 0) {
      throw DomainError("malformed partition: '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), static_cast<size_t>(repeat), value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) {
      throw DomainError("malformed partition: '" + std::string(text) + "'");
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::Row(int n) {
  if (n < 0) throw DomainError("negative weight");
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::Column(int n) {
  if (n < 0) throw DomainError("negative weight");
  return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

Partition Partition::Hook(int n, int j) {
  if (j < 0 || j >= n) throw DomainError("hook leg out of range");
  std::vector<int> parts{n - j};
  parts.insert(parts.end(), static_cast<size_t>(j), 1);
  return Partition(std::move(parts));
}

std::string Partition::ToString() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void Enumerate(int remaining, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    Enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  Enumerate(n, n, prefix, out);
  return out;
}

Natural partition_count(int n) {
  if (n < 0) return 0;
  std::vector<Natural> p(static_cast<size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Natural sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const bool plus = k % 2 == 1;
      Natural term = p[static_cast<size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<size_t>(m - g2)];
      if (plus) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[static_cast<size_t>(m)] = sum;
  }
  return p[static_cast<size_t>(n)];
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int col = 0; col < lambda.part(0); ++col) {
    int height = 0;
    while (lambda.part(height) > col) ++height;
    parts.push_back(height);
  }
  return Partition(std::move(parts));
}

Partition truncate(const Partition& lambda) {
  if (lambda.empty()) return lambda;
  auto parts = lambda.parts();
  return Partition(std::vector<int>(parts.begin() + 1, parts.end()));
}

Natural dimension(const Partition& lambda) {
  const Partition transpose = conjugate(lambda);
  Natural hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      const int arm = lambda.part(i) - j - 1;
      const int leg = transpose.part(j) - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return divide_exact(factorial(static_cast<unsigned long>(lambda.weight())),
                      hooks);
}

bool is_hook(const Partition& lambda) {
  return !lambda.empty() && lambda.part(1) <= 1;
}

bool is_proper_hook(const Partition& lambda) {
  return lambda.part(0) > 1 && lambda.part(1) == 1;
}

int hook_height(const Partition& lambda) {
  return lambda.empty() ? 0 : lambda.length() - 1;
}

Natural class_size(const Partition& gamma) {
  std::map<int, unsigned long> multiplicity;
  for (int part : gamma.parts()) ++multiplicity[part];
  Natural z = 1;
  for (auto [part, m] : multiplicity) {
    z *= factorial(m);
    z *= pow(Integer(part), m);
  }
  return divide_exact(factorial(static_cast<unsigned long>(gamma.weight())), z);
}

int fixed_points(const Partition& gamma) {
  return static_cast<int>(
      std::count(gamma.parts().begin(), gamma.parts().end(), 1));
}

int sign(const Partition& gamma) {
  return (gamma.weight() - gamma.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace symmix

size_t std::hash<symmix::Partition>::operator()(
    const symmix::Partition& p) const noexcept {
  // FNV-1a over the parts.
  size_t h = 1469598103934665603ull;
  for (int part : p.parts()) {
    h ^= static_cast<size_t>(part);
    h *= 1099511628211ull;
  }
  return h;
}
