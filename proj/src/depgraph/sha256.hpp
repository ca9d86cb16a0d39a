// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <openssl/evp.h>

#include <memory>
#include <string>
#include <string_view>

#include "mereoscan/error.hpp"

namespace mereoscan::depgraph::detail {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
            throw Error("depgraph", "cannot initialise SHA-256");
        }
    }

    void update(std::string_view data) {
        EVP_DigestUpdate(ctx_.get(), data.data(), data.size());
    }

    // Lowercase hex, prefixed with "sha256:".
    std::string hex() {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_.get(), md, &len);
        static constexpr char digits[] = "0123456789abcdef";
        std::string out = "sha256:";
        for (unsigned int i = 0; i < len; ++i) {
            out += digits[md[i] >> 4];
            out += digits[md[i] & 0xF];
        }
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace mereoscan::depgraph::detail
