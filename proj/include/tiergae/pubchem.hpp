// Copyright 2026 The tiergae Authors.
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

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tiergae {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// One GET of the given URL. Implementations throw (any std::exception) on
// connection failures and timeouts; HTTP error statuses are returned.
using Transport = std::function<HttpResponse(const std::string& url)>;

inline constexpr std::string_view kPubchemBaseUrl = "https://pubchem.ncbi.nlm.nih.gov/rest/pug";
// Overrides kPubchemBaseUrl when set, e.g. to point at a local test server.
inline constexpr const char* kPubchemUrlEnv = "TIERGAE_PUBCHEM_URL";

struct FetchOptions {
  std::string base_url = std::string(kPubchemBaseUrl);
  // Extra attempts after a transport failure or 5xx response; 0 or 1.
  int retries = 0;
  // Pause between consecutive requests in fetch_pubchem_batch.
  std::chrono::milliseconds politeness_delay{250};
};

// kPubchemBaseUrl, or the value of $TIERGAE_PUBCHEM_URL.
std::string pubchem_base_url();

// <base>/compound/cid/<cid>/SDF
std::string pubchem_sdf_url(std::int64_t cid, std::string_view base_url);

// Downloads the SDF record of one compound.
// Throws Error(kNotFound) for cid <= 0 (no request is made) and for 400/404
// responses, Error(kTransportError) naming the cid for everything else.
std::string fetch_pubchem_sdf(std::int64_t cid, const Transport& transport,
                              const FetchOptions& options = {});

struct FetchedRecord {
  std::int64_t cid = 0;
  std::string sdf;
};

// Sequential fetch with options.politeness_delay between requests. Stops
// at the first failure.
std::vector<FetchedRecord> fetch_pubchem_batch(const std::vector<std::int64_t>& cids,
                                               const Transport& transport,
                                               const FetchOptions& options = {});

// cpp-httplib backed transport (HTTP and HTTPS).
Transport make_http_transport(std::chrono::seconds timeout = std::chrono::seconds(30));

}  // namespace tiergae
