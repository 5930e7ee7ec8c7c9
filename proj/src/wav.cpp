// Copyright 2026 The fra-rir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "frarir/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "frarir/error.hpp"

namespace frarir {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t Le32(const unsigned char* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
         std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
}

std::uint16_t Le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void Put32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void Put16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void PutTag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

double DecodeSample(const unsigned char* p, std::uint16_t format, int bits) {
  if (format == kFormatFloat) {
    if (bits == 32) return std::bit_cast<float>(Le32(p));
    std::uint64_t v = std::uint64_t(Le32(p)) | std::uint64_t(Le32(p + 4)) << 32;
    return std::bit_cast<double>(v);
  }
  switch (bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16:
      return static_cast<std::int16_t>(Le16(p)) / 32768.0;
    case 24: {
      std::int32_t v = p[0] | p[1] << 8 | p[2] << 16;
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    default:
      return static_cast<std::int32_t>(Le32(p)) / 2147483648.0;
  }
}

}  // namespace

WavData ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  const auto bad = [&](const std::string& why) {
    return IoError(path + ": " + why);
  };
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw bad("not a RIFF/WAVE file");
  }

  std::uint16_t format = 0;
  int channels = 0, bits = 0;
  double rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = Le32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = std::min(size, bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) throw bad("truncated fmt chunk");
      const unsigned char* f = bytes.data() + body;
      format = Le16(f);
      channels = Le16(f + 2);
      rate = Le32(f + 4);
      bits = Le16(f + 14);
      if (format == kFormatExtensible) {
        if (avail < 26) throw bad("truncated extensible fmt chunk");
        format = Le16(f + 24);  // first two bytes of the sub-format GUID
      }
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = avail;
    }
    pos = body + size + (size & 1);
  }
  if (!channels || !data) throw bad("missing fmt or data chunk");
  const bool pcm_ok = format == kFormatPcm &&
                      (bits == 8 || bits == 16 || bits == 24 || bits == 32);
  const bool float_ok = format == kFormatFloat && (bits == 32 || bits == 64);
  if (!pcm_ok && !float_ok) {
    throw bad("unsupported sample format " + std::to_string(format) + "/" +
              std::to_string(bits) + " bit");
  }
  if (!(rate > 0)) throw bad("invalid sample rate");

  WavData wav;
  wav.sample_rate = rate;
  wav.channels = channels;
  const std::size_t stride = static_cast<std::size_t>(bits / 8);
  const std::size_t frame_bytes = stride * channels;
  const std::size_t count = (data_size / frame_bytes) * channels;
  wav.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    wav.samples[i] = DecodeSample(data + i * stride, format, bits);
  }
  return wav;
}

WavData ReadMonoWav(const std::string& path) {
  WavData wav = ReadWav(path);
  if (wav.channels != 1) {
    throw IoError(path + ": expected mono audio, found " +
                  std::to_string(wav.channels) + " channels");
  }
  return wav;
}

void WriteWavFloat(const std::string& path, double sample_rate,
                   std::span<const double> samples) {
  const auto rate = static_cast<std::uint32_t>(std::lround(sample_rate));
  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * 4);
  std::vector<unsigned char> out;
  out.reserve(58 + data_bytes);
  PutTag(out, "RIFF");
  Put32(out, 4 + (8 + 18) + (8 + 4) + (8 + data_bytes));
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  Put32(out, 18);
  Put16(out, kFormatFloat);
  Put16(out, 1);
  Put32(out, rate);
  Put32(out, rate * 4);
  Put16(out, 4);
  Put16(out, 32);
  Put16(out, 0);
  PutTag(out, "fact");
  Put32(out, 4);
  Put32(out, static_cast<std::uint32_t>(samples.size()));
  PutTag(out, "data");
  Put32(out, data_bytes);
  for (double s : samples) Put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(s)));

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed for " + path);
}

}  // namespace frarir
