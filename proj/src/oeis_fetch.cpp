#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cctype>
#include <cstdio>
#include <fstream>

#include "arborith/verify.hpp"

namespace arborith {

namespace {

bool valid_sequence_id(const std::string& id) {
  if (id.size() < 2 || id[0] != 'A') return false;
  for (size_t i = 1; i < id.size(); i++) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

}  // namespace

void fetch_bfile(const std::string& sequence_id, const std::string& cache_path,
                 const std::string& host, int port) {
  if (!valid_sequence_id(sequence_id))
    throw DomainError("fetch_bfile: sequence id must look like 'A000040', got '" + sequence_id + "'");

  const std::string path = "/" + sequence_id + "/b" + sequence_id.substr(1) + ".txt";
  httplib::SSLClient client(host, port);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  client.set_follow_location(true);

  auto res = client.Get(path);
  if (!res) throw NetworkError("fetch_bfile: request to " + host + path + " failed: " +
                               httplib::to_string(res.error()));
  if (res->status != 200)
    throw NetworkError("fetch_bfile: " + host + path + " returned status " + std::to_string(res->status));

  // Write to a sibling temp file and rename, so the cache is either the old
  // content or the complete new download, never a torso.
  const std::string tmp = cache_path + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError("cannot write '" + tmp + "'");
    out << res->body;
    if (!out.flush()) throw FileError("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), cache_path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw FileError("cannot replace '" + cache_path + "'");
  }
}

}  // namespace arborith
