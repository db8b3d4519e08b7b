#pragma once

#include <cstddef>

namespace testsupport {

// 12x24 Radiance HDR file produced by a third-party writer (OpenCV),
// RLE scanlines, with the expected decoded values below.
inline constexpr unsigned char kSampleHdr[] = {
    35, 63, 82, 65, 68, 73, 65, 78, 67, 69, 10, 70, 79, 82, 77, 65,
    84, 61, 51, 50, 45, 98, 105, 116, 95, 114, 108, 101, 95, 114, 103, 98,
    101, 10, 10, 45, 89, 32, 49, 50, 32, 43, 88, 32, 50, 52, 10, 2,
    2, 0, 24, 131, 0, 132, 1, 132, 2, 132, 3, 132, 4, 132, 5, 1,
    6, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158, 161,
    163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4, 5,
    6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68, 81,
    97, 115, 137, 152, 128, 2, 2, 0, 24, 24, 0, 1, 1, 2, 2, 3,
    3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11,
    11, 12, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158,
    161, 163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4,
    5, 6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68,
    81, 97, 115, 137, 152, 128, 2, 2, 0, 24, 24, 0, 1, 2, 3, 3,
    4, 5, 6, 6, 7, 8, 9, 9, 10, 11, 12, 13, 13, 14, 15, 16,
    16, 17, 18, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156,
    158, 161, 163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3,
    4, 5, 6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57,
    68, 81, 97, 115, 137, 152, 128, 2, 2, 0, 24, 152, 64, 152, 128, 152,
    192, 152, 128, 2, 2, 0, 24, 24, 1, 2, 3, 5, 6, 7, 8, 10,
    11, 12, 14, 15, 16, 17, 19, 20, 21, 23, 24, 25, 26, 28, 29, 30,
    24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158, 161, 163,
    166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4, 5, 6,
    7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68, 81, 97,
    115, 137, 152, 128, 2, 2, 0, 24, 24, 1, 3, 4, 6, 7, 9, 10,
    12, 13, 15, 16, 18, 19, 21, 23, 24, 26, 27, 29, 30, 32, 33, 35,
    36, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158, 161,
    163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4, 5,
    6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68, 81,
    97, 115, 137, 152, 128, 2, 2, 0, 24, 24, 1, 3, 5, 7, 8, 10,
    12, 14, 16, 17, 19, 21, 23, 25, 26, 28, 30, 32, 34, 35, 37, 39,
    41, 43, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158,
    161, 163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4,
    5, 6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68,
    81, 97, 115, 137, 152, 128, 2, 2, 0, 24, 152, 0, 152, 0, 152, 0,
    152, 0, 2, 2, 0, 24, 24, 2, 4, 6, 9, 11, 13, 16, 18, 20,
    23, 25, 27, 29, 32, 34, 36, 39, 41, 43, 46, 48, 50, 52, 55, 24,
    128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158, 161, 163, 166,
    168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4, 5, 6, 7,
    8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68, 81, 97, 115,
    137, 152, 128, 2, 2, 0, 24, 24, 2, 5, 7, 10, 12, 15, 17, 20,
    23, 25, 28, 30, 33, 35, 38, 40, 43, 46, 48, 51, 53, 56, 58, 61,
    24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158, 161, 163,
    166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4, 5, 6,
    7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68, 81, 97,
    115, 137, 152, 128, 2, 2, 0, 24, 24, 2, 5, 8, 11, 14, 16, 19,
    22, 25, 28, 30, 33, 36, 39, 42, 45, 47, 50, 53, 56, 59, 61, 64,
    67, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158, 161,
    163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4, 5,
    6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68, 81,
    97, 115, 137, 152, 128, 2, 2, 0, 24, 24, 3, 6, 9, 12, 15, 18,
    21, 24, 27, 30, 33, 36, 39, 43, 46, 49, 52, 55, 58, 61, 64, 67,
    70, 73, 24, 128, 130, 133, 135, 138, 140, 143, 145, 148, 151, 153, 156, 158,
    161, 163, 166, 168, 171, 174, 176, 179, 181, 184, 186, 24, 2, 3, 3, 4,
    5, 6, 7, 8, 10, 12, 14, 17, 20, 24, 28, 34, 40, 48, 57, 68,
    81, 97, 115, 137, 152, 128,
};
inline constexpr std::size_t kSampleHdrSize = sizeof(kSampleHdr);

inline constexpr int kSampleHdrHeight = 12;
inline constexpr int kSampleHdrWidth = 24;

// values cv2 decodes from the file (RGB, row-major)
inline constexpr float kSampleHdrValues[] = {
    0.0f, 0.5f, 0.0078125f, 0.0f, 0.5078125f, 0.01171875f,
    0.0f, 0.51953125f, 0.01171875f, 0.00390625f, 0.52734375f, 0.015625f,
    0.00390625f, 0.5390625f, 0.01953125f, 0.00390625f, 0.546875f, 0.0234375f,
    0.00390625f, 0.55859375f, 0.02734375f, 0.0078125f, 0.56640625f, 0.03125f,
    0.0078125f, 0.578125f, 0.0390625f, 0.0078125f, 0.58984375f, 0.046875f,
    0.0078125f, 0.59765625f, 0.0546875f, 0.01171875f, 0.609375f, 0.06640625f,
    0.01171875f, 0.6171875f, 0.078125f, 0.01171875f, 0.62890625f, 0.09375f,
    0.01171875f, 0.63671875f, 0.109375f, 0.015625f, 0.6484375f, 0.1328125f,
    0.015625f, 0.65625f, 0.15625f, 0.015625f, 0.66796875f, 0.1875f,
    0.015625f, 0.6796875f, 0.22265625f, 0.01953125f, 0.6875f, 0.265625f,
    0.01953125f, 0.69921875f, 0.31640625f, 0.01953125f, 0.70703125f, 0.37890625f,
    0.01953125f, 0.71875f, 0.44921875f, 0.0234375f, 0.7265625f, 0.53515625f,
    0.0f, 0.5f, 0.0078125f, 0.00390625f, 0.5078125f, 0.01171875f,
    0.00390625f, 0.51953125f, 0.01171875f, 0.0078125f, 0.52734375f, 0.015625f,
    0.0078125f, 0.5390625f, 0.01953125f, 0.01171875f, 0.546875f, 0.0234375f,
    0.01171875f, 0.55859375f, 0.02734375f, 0.015625f, 0.56640625f, 0.03125f,
    0.015625f, 0.578125f, 0.0390625f, 0.01953125f, 0.58984375f, 0.046875f,
    0.01953125f, 0.59765625f, 0.0546875f, 0.0234375f, 0.609375f, 0.06640625f,
    0.0234375f, 0.6171875f, 0.078125f, 0.02734375f, 0.62890625f, 0.09375f,
    0.02734375f, 0.63671875f, 0.109375f, 0.03125f, 0.6484375f, 0.1328125f,
    0.03125f, 0.65625f, 0.15625f, 0.03515625f, 0.66796875f, 0.1875f,
    0.03515625f, 0.6796875f, 0.22265625f, 0.0390625f, 0.6875f, 0.265625f,
    0.0390625f, 0.69921875f, 0.31640625f, 0.04296875f, 0.70703125f, 0.37890625f,
    0.04296875f, 0.71875f, 0.44921875f, 0.046875f, 0.7265625f, 0.53515625f,
    0.0f, 0.5f, 0.0078125f, 0.00390625f, 0.5078125f, 0.01171875f,
    0.0078125f, 0.51953125f, 0.01171875f, 0.01171875f, 0.52734375f, 0.015625f,
    0.01171875f, 0.5390625f, 0.01953125f, 0.015625f, 0.546875f, 0.0234375f,
    0.01953125f, 0.55859375f, 0.02734375f, 0.0234375f, 0.56640625f, 0.03125f,
    0.0234375f, 0.578125f, 0.0390625f, 0.02734375f, 0.58984375f, 0.046875f,
    0.03125f, 0.59765625f, 0.0546875f, 0.03515625f, 0.609375f, 0.06640625f,
    0.03515625f, 0.6171875f, 0.078125f, 0.0390625f, 0.62890625f, 0.09375f,
    0.04296875f, 0.63671875f, 0.109375f, 0.046875f, 0.6484375f, 0.1328125f,
    0.05078125f, 0.65625f, 0.15625f, 0.05078125f, 0.66796875f, 0.1875f,
    0.0546875f, 0.6796875f, 0.22265625f, 0.05859375f, 0.6875f, 0.265625f,
    0.0625f, 0.69921875f, 0.31640625f, 0.0625f, 0.70703125f, 0.37890625f,
    0.06640625f, 0.71875f, 0.44921875f, 0.0703125f, 0.7265625f, 0.53515625f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.25f, 0.5f, 0.75f, 0.25f, 0.5f, 0.75f,
    0.00390625f, 0.5f, 0.0078125f, 0.0078125f, 0.5078125f, 0.01171875f,
    0.01171875f, 0.51953125f, 0.01171875f, 0.01953125f, 0.52734375f, 0.015625f,
    0.0234375f, 0.5390625f, 0.01953125f, 0.02734375f, 0.546875f, 0.0234375f,
    0.03125f, 0.55859375f, 0.02734375f, 0.0390625f, 0.56640625f, 0.03125f,
    0.04296875f, 0.578125f, 0.0390625f, 0.046875f, 0.58984375f, 0.046875f,
    0.0546875f, 0.59765625f, 0.0546875f, 0.05859375f, 0.609375f, 0.06640625f,
    0.0625f, 0.6171875f, 0.078125f, 0.06640625f, 0.62890625f, 0.09375f,
    0.07421875f, 0.63671875f, 0.109375f, 0.078125f, 0.6484375f, 0.1328125f,
    0.08203125f, 0.65625f, 0.15625f, 0.08984375f, 0.66796875f, 0.1875f,
    0.09375f, 0.6796875f, 0.22265625f, 0.09765625f, 0.6875f, 0.265625f,
    0.1015625f, 0.69921875f, 0.31640625f, 0.109375f, 0.70703125f, 0.37890625f,
    0.11328125f, 0.71875f, 0.44921875f, 0.1171875f, 0.7265625f, 0.53515625f,
    0.00390625f, 0.5f, 0.0078125f, 0.01171875f, 0.5078125f, 0.01171875f,
    0.015625f, 0.51953125f, 0.01171875f, 0.0234375f, 0.52734375f, 0.015625f,
    0.02734375f, 0.5390625f, 0.01953125f, 0.03515625f, 0.546875f, 0.0234375f,
    0.0390625f, 0.55859375f, 0.02734375f, 0.046875f, 0.56640625f, 0.03125f,
    0.05078125f, 0.578125f, 0.0390625f, 0.05859375f, 0.58984375f, 0.046875f,
    0.0625f, 0.59765625f, 0.0546875f, 0.0703125f, 0.609375f, 0.06640625f,
    0.07421875f, 0.6171875f, 0.078125f, 0.08203125f, 0.62890625f, 0.09375f,
    0.08984375f, 0.63671875f, 0.109375f, 0.09375f, 0.6484375f, 0.1328125f,
    0.1015625f, 0.65625f, 0.15625f, 0.10546875f, 0.66796875f, 0.1875f,
    0.11328125f, 0.6796875f, 0.22265625f, 0.1171875f, 0.6875f, 0.265625f,
    0.125f, 0.69921875f, 0.31640625f, 0.12890625f, 0.70703125f, 0.37890625f,
    0.13671875f, 0.71875f, 0.44921875f, 0.140625f, 0.7265625f, 0.53515625f,
    0.00390625f, 0.5f, 0.0078125f, 0.01171875f, 0.5078125f, 0.01171875f,
    0.01953125f, 0.51953125f, 0.01171875f, 0.02734375f, 0.52734375f, 0.015625f,
    0.03125f, 0.5390625f, 0.01953125f, 0.0390625f, 0.546875f, 0.0234375f,
    0.046875f, 0.55859375f, 0.02734375f, 0.0546875f, 0.56640625f, 0.03125f,
    0.0625f, 0.578125f, 0.0390625f, 0.06640625f, 0.58984375f, 0.046875f,
    0.07421875f, 0.59765625f, 0.0546875f, 0.08203125f, 0.609375f, 0.06640625f,
    0.08984375f, 0.6171875f, 0.078125f, 0.09765625f, 0.62890625f, 0.09375f,
    0.1015625f, 0.63671875f, 0.109375f, 0.109375f, 0.6484375f, 0.1328125f,
    0.1171875f, 0.65625f, 0.15625f, 0.125f, 0.66796875f, 0.1875f,
    0.1328125f, 0.6796875f, 0.22265625f, 0.13671875f, 0.6875f, 0.265625f,
    0.14453125f, 0.69921875f, 0.31640625f, 0.15234375f, 0.70703125f, 0.37890625f,
    0.16015625f, 0.71875f, 0.44921875f, 0.16796875f, 0.7265625f, 0.53515625f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0078125f, 0.5f, 0.0078125f, 0.015625f, 0.5078125f, 0.01171875f,
    0.0234375f, 0.51953125f, 0.01171875f, 0.03515625f, 0.52734375f, 0.015625f,
    0.04296875f, 0.5390625f, 0.01953125f, 0.05078125f, 0.546875f, 0.0234375f,
    0.0625f, 0.55859375f, 0.02734375f, 0.0703125f, 0.56640625f, 0.03125f,
    0.078125f, 0.578125f, 0.0390625f, 0.08984375f, 0.58984375f, 0.046875f,
    0.09765625f, 0.59765625f, 0.0546875f, 0.10546875f, 0.609375f, 0.06640625f,
    0.11328125f, 0.6171875f, 0.078125f, 0.125f, 0.62890625f, 0.09375f,
    0.1328125f, 0.63671875f, 0.109375f, 0.140625f, 0.6484375f, 0.1328125f,
    0.15234375f, 0.65625f, 0.15625f, 0.16015625f, 0.66796875f, 0.1875f,
    0.16796875f, 0.6796875f, 0.22265625f, 0.1796875f, 0.6875f, 0.265625f,
    0.1875f, 0.69921875f, 0.31640625f, 0.1953125f, 0.70703125f, 0.37890625f,
    0.203125f, 0.71875f, 0.44921875f, 0.21484375f, 0.7265625f, 0.53515625f,
    0.0078125f, 0.5f, 0.0078125f, 0.01953125f, 0.5078125f, 0.01171875f,
    0.02734375f, 0.51953125f, 0.01171875f, 0.0390625f, 0.52734375f, 0.015625f,
    0.046875f, 0.5390625f, 0.01953125f, 0.05859375f, 0.546875f, 0.0234375f,
    0.06640625f, 0.55859375f, 0.02734375f, 0.078125f, 0.56640625f, 0.03125f,
    0.08984375f, 0.578125f, 0.0390625f, 0.09765625f, 0.58984375f, 0.046875f,
    0.109375f, 0.59765625f, 0.0546875f, 0.1171875f, 0.609375f, 0.06640625f,
    0.12890625f, 0.6171875f, 0.078125f, 0.13671875f, 0.62890625f, 0.09375f,
    0.1484375f, 0.63671875f, 0.109375f, 0.15625f, 0.6484375f, 0.1328125f,
    0.16796875f, 0.65625f, 0.15625f, 0.1796875f, 0.66796875f, 0.1875f,
    0.1875f, 0.6796875f, 0.22265625f, 0.19921875f, 0.6875f, 0.265625f,
    0.20703125f, 0.69921875f, 0.31640625f, 0.21875f, 0.70703125f, 0.37890625f,
    0.2265625f, 0.71875f, 0.44921875f, 0.23828125f, 0.7265625f, 0.53515625f,
    0.0078125f, 0.5f, 0.0078125f, 0.01953125f, 0.5078125f, 0.01171875f,
    0.03125f, 0.51953125f, 0.01171875f, 0.04296875f, 0.52734375f, 0.015625f,
    0.0546875f, 0.5390625f, 0.01953125f, 0.0625f, 0.546875f, 0.0234375f,
    0.07421875f, 0.55859375f, 0.02734375f, 0.0859375f, 0.56640625f, 0.03125f,
    0.09765625f, 0.578125f, 0.0390625f, 0.109375f, 0.58984375f, 0.046875f,
    0.1171875f, 0.59765625f, 0.0546875f, 0.12890625f, 0.609375f, 0.06640625f,
    0.140625f, 0.6171875f, 0.078125f, 0.15234375f, 0.62890625f, 0.09375f,
    0.1640625f, 0.63671875f, 0.109375f, 0.17578125f, 0.6484375f, 0.1328125f,
    0.18359375f, 0.65625f, 0.15625f, 0.1953125f, 0.66796875f, 0.1875f,
    0.20703125f, 0.6796875f, 0.22265625f, 0.21875f, 0.6875f, 0.265625f,
    0.23046875f, 0.69921875f, 0.31640625f, 0.23828125f, 0.70703125f, 0.37890625f,
    0.25f, 0.71875f, 0.44921875f, 0.26171875f, 0.7265625f, 0.53515625f,
    0.01171875f, 0.5f, 0.0078125f, 0.0234375f, 0.5078125f, 0.01171875f,
    0.03515625f, 0.51953125f, 0.01171875f, 0.046875f, 0.52734375f, 0.015625f,
    0.05859375f, 0.5390625f, 0.01953125f, 0.0703125f, 0.546875f, 0.0234375f,
    0.08203125f, 0.55859375f, 0.02734375f, 0.09375f, 0.56640625f, 0.03125f,
    0.10546875f, 0.578125f, 0.0390625f, 0.1171875f, 0.58984375f, 0.046875f,
    0.12890625f, 0.59765625f, 0.0546875f, 0.140625f, 0.609375f, 0.06640625f,
    0.15234375f, 0.6171875f, 0.078125f, 0.16796875f, 0.62890625f, 0.09375f,
    0.1796875f, 0.63671875f, 0.109375f, 0.19140625f, 0.6484375f, 0.1328125f,
    0.203125f, 0.65625f, 0.15625f, 0.21484375f, 0.66796875f, 0.1875f,
    0.2265625f, 0.6796875f, 0.22265625f, 0.23828125f, 0.6875f, 0.265625f,
    0.25f, 0.69921875f, 0.31640625f, 0.26171875f, 0.70703125f, 0.37890625f,
    0.2734375f, 0.71875f, 0.44921875f, 0.28515625f, 0.7265625f, 0.53515625f,
};

}  // namespace testsupport
