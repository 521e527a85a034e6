// HTTP server for parse/generate. Configured through the environment:
//   AKKADIAN_LISTEN, AKKADIAN_PORT, AKKADIAN_DATA_DIR, AKKADIAN_STATIC_DIR,
//   AKKADIAN_MAX_SEGMENTS

#include <exception>
#include <iostream>

#include "akkadian/service.hpp"

int main() {
  using namespace akkadian;
  try {
    const auto config = service::Config::from_env();
    const service::Service svc(config);
    // load every rule set up front so a bad data dir fails here
    for (const auto& stem : svc.analyzer().registry().stems()) svc.analyzer().registry().stem_rules(stem);

    httplib::Server server;
    service::install(server, svc);
    std::cerr << "listening on " << config.host << ":" << config.port << "\n";
    if (!server.listen(config.host, config.port)) {
      std::cerr << "cannot listen on " << config.host << ":" << config.port << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "akkadian_server: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
