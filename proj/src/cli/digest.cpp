#include <kneser/cli.hpp>

#include <openssl/evp.h>

#include <array>
#include <memory>

namespace kneser::cli
{
    auto sha256_hex(std::string_view data) -> std::string
    {
        std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> context(EVP_MD_CTX_new(), EVP_MD_CTX_free);
        std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
        unsigned int length = 0;
        if (! context || EVP_DigestInit_ex(context.get(), EVP_sha256(), nullptr) != 1
            || EVP_DigestUpdate(context.get(), data.data(), data.size()) != 1
            || EVP_DigestFinal_ex(context.get(), digest.data(), &length) != 1)
            throw std::runtime_error("sha256 computation failed");
        static constexpr char hex[] = "0123456789abcdef";
        std::string result;
        for (unsigned int i = 0; i < length; ++i) {
            result.push_back(hex[digest[i] >> 4]);
            result.push_back(hex[digest[i] & 0xF]);
        }
        return result;
    }
}
