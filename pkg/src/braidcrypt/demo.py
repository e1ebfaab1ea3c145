"""Live key exchange over TCP.

The connecting side plays Alice and opens with an 0x01 frame carrying her
transformed q tuple; the listening side plays Bob and answers with an 0x02
frame. Each side prints the session key in lowercase hex and closes. A
malformed request is answered with an 0x03 frame holding a UTF-8 reason.
"""

from __future__ import annotations

import logging
import socket
import socketserver
import sys

from .errors import BraidError, ProtocolCorrupt
from .kx import (
    KxMessage,
    KxParams,
    KxPrivate,
    Role,
    alice_message,
    alice_shared,
    bob_message,
    bob_shared,
    kx_keygen,
)
from .wire import (
    FRAME_ALICE,
    FRAME_BOB,
    FRAME_ERROR,
    Frame,
    decode_braid_list,
    encode_braid_list,
    recv_frame,
    send_frame,
)

log = logging.getLogger(__name__)

TIMEOUT = 30.0


def message_frame(msg: KxMessage, ftype: int) -> Frame:
    return Frame(ftype, encode_braid_list(msg.transformed))


def frame_message(frame: Frame, expected: int) -> KxMessage:
    if frame.type == FRAME_ERROR:
        raise ProtocolCorrupt(f"peer reported: {frame.payload.decode('utf-8', 'replace')}")
    if frame.type != expected:
        raise ProtocolCorrupt(f"expected frame type {expected:#x}, got {frame.type:#x}")
    return KxMessage(tuple(decode_braid_list(frame.payload)))


def _bob_session(sock, params: KxParams, priv: KxPrivate) -> bytes:
    try:
        msg = frame_message(recv_frame(sock), FRAME_ALICE)
        shared = bob_shared(priv, msg, params)
    except BraidError as exc:
        send_frame(sock, Frame(FRAME_ERROR, str(exc).encode("utf-8")))
        raise
    send_frame(sock, message_frame(bob_message(priv, params), FRAME_BOB))
    return shared.key


class _Handler(socketserver.BaseRequestHandler):
    def handle(self):
        server = self.server
        self.request.settimeout(TIMEOUT)
        try:
            key = _bob_session(self.request, server.params, server.priv)
        except (BraidError, OSError) as exc:
            log.warning("session from %s failed: %s", self.client_address, exc)
            server.failed = True
            return
        print(key.hex(), file=server.out, flush=True)


class DemoServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address, params: KxParams, seed: bytes, out=None, inline: bool = False):
        super().__init__(address, _Handler)
        self.params = params
        self.priv = kx_keygen(params, Role.BOB, seed)
        self.out = out or sys.stdout
        self.failed = False
        self.inline = inline

    def process_request(self, request, client_address):
        if self.inline:
            # one-shot mode: finish the session before handle_request returns
            socketserver.TCPServer.process_request(self, request, client_address)
        else:
            super().process_request(request, client_address)


def serve(host: str, port: int, params: KxParams, seed: bytes, once: bool = False, out=None) -> bool:
    """Run Bob's side; with ``once`` handle a single connection and return its success."""
    with DemoServer((host, port), params, seed, out, inline=once) as server:
        bound = server.server_address[1]
        print(f"listening on {host}:{bound}", file=sys.stderr, flush=True)
        if once:
            server.timeout = TIMEOUT
            server.handle_request()
            return not server.failed
        server.serve_forever()
    return True


def connect(host: str, port: int, params: KxParams, seed: bytes) -> bytes:
    """Run Alice's side and return the session key."""
    priv = kx_keygen(params, Role.ALICE, seed)
    with socket.create_connection((host, port), timeout=TIMEOUT) as sock:
        send_frame(sock, message_frame(alice_message(priv, params), FRAME_ALICE))
        msg = frame_message(recv_frame(sock), FRAME_BOB)
    return alice_shared(priv, msg, params).key
