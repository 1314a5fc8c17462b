#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "bernoulli/oeis.hpp"

namespace bernoulli::oeis {

Fetcher http_fetcher() {
    return [](const std::string& url) -> std::string {
        // url is "https://host/path".
        const auto scheme_end = url.find("://");
        const auto path_start = url.find('/', scheme_end + 3);
        if (scheme_end == std::string::npos || path_start == std::string::npos) {
            throw NetworkError("malformed URL " + url);
        }
        httplib::Client client(url.substr(0, path_start));
        client.set_follow_location(true);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        auto res = client.Get(url.substr(path_start));
        if (!res) {
            throw NetworkError("GET " + url + " failed: " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw NetworkError("GET " + url + " returned HTTP " + std::to_string(res->status));
        }
        return res->body;
    };
}

}  // namespace bernoulli::oeis
