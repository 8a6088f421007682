// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

// HTTP/JSON front end over the C interface.
//
//   GET  /check?word=         verdict (+ suggestions when misspelt)
//   GET  /split?word=         every split, primary first
//   GET  /root?word=          root and stripped markers
//   GET  /suggest?word=       suggestions only
//   GET  /join?prefix=&suffix=[&rule=]
//   GET  /corpus?text=        per-token report; POST /corpus takes the text as
//   POST /corpus              the body, or as a multipart "text"/"file" part
//   POST /choice              {"misspelt": ..., "chosen": ...}
//   POST /lexicon             {"word": ...}
//   GET  /stats, GET /rules
//
// Failures answer {"error": {"status": ..., "message": ...}} with 400 for bad
// input, 404 for unknown routes, 500 otherwise.

#pragma once

#include <string>

#include "httplib.h"
#include "kanspell/kanspell.h"

namespace kanspell::service {

// `engine` must outlive the server. Static files are served from
// `static_dir` when it is not empty.
void install_routes(httplib::Server& server, ks_engine* engine,
                    const std::string& static_dir = {});

}  // namespace kanspell::service
