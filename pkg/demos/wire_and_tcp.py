"""
Canonical bytes and a live handshake
====================================

Normal forms serialize to fixed byte strings, so braids hash the same way no
matter how they were computed. The same framing carries a key exchange over
a loopback TCP connection.
"""

import io
import threading

from braidcrypt.demo import DemoServer, connect
from braidcrypt.garside import left_normal_form, nf_identity
from braidcrypt.kx import KxParams
from braidcrypt.wire import decode_nf, encode_nf
from braidcrypt.words import fundamental_braid, parse_word

for label, nf in [
    ("e", nf_identity(3)),
    ("a_1", left_normal_form(parse_word("1", 3))),
    ("Delta", left_normal_form(fundamental_braid(3))),
]:
    print(f"{label:6s}", encode_nf(nf).hex(" "))

# two spellings, one encoding
x = encode_nf(left_normal_form(parse_word("1 2 1 3", 4)))
y = encode_nf(left_normal_form(parse_word("2 1 2 3", 4)))
print("\nsame bytes for equal braids:", x == y, " round trip:", decode_nf(x) == left_normal_form(parse_word("1 2 1 3", 4)))

# Bob listens, Alice connects; both print the same session key
params = KxParams(
    5,
    tuple(parse_word(t, 5) for t in ("1 2", "3 4", "2")),
    tuple(parse_word(t, 5) for t in ("4 3", "1", "2 3")),
    k=8,
    h=8,
    L_min=2,
    L_max=6,
)
out = io.StringIO()
server = DemoServer(("127.0.0.1", 0), params, b"bob", out, inline=True)
thread = threading.Thread(target=server.handle_request)
thread.start()
alice_key = connect("127.0.0.1", server.server_address[1], params, b"alice")
thread.join()
server.server_close()
print("\nAlice's key:", alice_key.hex())
print("Bob's key:  ", out.getvalue().strip())
